//! Tripartite states under uniform acceleration.
//!
//! Three observers share a W, GHZ or GHZ-like state of fermionic Minkowski
//! modes. From a uniformly accelerated frame each Minkowski mode splits into
//! a fermion mode in Rindler region I and an anti-fermion mode in region II:
//!
//! ```text
//! |0_k>  ->  cos r_k |0_k>_I |0_k>_II + e^(-i phi_k) sin r_k |1_k>_I |1_k>_II
//! |1_k>  ->  |1_k>_I |0_k>_II
//! ```
//!
//! with r_k in [0, pi/4]; the map saturates at cos r = sin r = 1/sqrt(2).
//! Tracing out the modes of the opposite region yields the 8x8 channel
//! output each wedge observer actually sees.

use std::f64::consts::FRAC_PI_4;
use std::fmt;
use std::str::FromStr;

use crate::{Complex64, DensityMatrix, Error, PureState};

/// The three inequivalent tripartite input states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StateFamily {
    W,
    Ghz,
    GhzLike,
}

impl StateFamily {
    /// Declaration order used for sweep output: W, GHZ, GHZ-like.
    pub const ALL: [StateFamily; 3] = [StateFamily::W, StateFamily::Ghz, StateFamily::GhzLike];

    pub fn name(&self) -> &'static str {
        match self {
            StateFamily::W => "W",
            StateFamily::Ghz => "GHZ",
            StateFamily::GhzLike => "GHZ-like",
        }
    }
}

impl fmt::Display for StateFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StateFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "w" => Ok(StateFamily::W),
            "ghz" => Ok(StateFamily::Ghz),
            "ghz-like" | "ghz_like" | "ghzlike" => Ok(StateFamily::GhzLike),
            _ => Err(format!(
                "unknown state family \"{s}\" (expected one of: w, ghz, ghz-like)"
            )),
        }
    }
}

/// The two causally disconnected Rindler wedges; region I carries the
/// fermion modes, region II the anti-fermion modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RindlerRegion {
    I,
    II,
}

impl RindlerRegion {
    pub const ALL: [RindlerRegion; 2] = [RindlerRegion::I, RindlerRegion::II];

    pub fn name(&self) -> &'static str {
        match self {
            RindlerRegion::I => "I",
            RindlerRegion::II => "II",
        }
    }
}

impl fmt::Display for RindlerRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RindlerRegion {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "I" => Ok(RindlerRegion::I),
            "II" => Ok(RindlerRegion::II),
            _ => Err(format!("unknown region \"{s}\" (expected I or II)")),
        }
    }
}

/// Acceleration parameters r_a, r_b, r_c in [0, pi/4] plus the per-mode
/// phases phi_k of the vacuum branch (zero by default; every closed form in
/// this crate assumes real coefficients, which requires phi = 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccelerationTriple {
    r: [f64; 3],
    phi: [f64; 3],
}

impl AccelerationTriple {
    pub const ZERO: AccelerationTriple = AccelerationTriple {
        r: [0.0; 3],
        phi: [0.0; 3],
    };

    pub fn new(r_a: f64, r_b: f64, r_c: f64) -> Result<Self, Error> {
        Self::with_phases(r_a, r_b, r_c, 0.0, 0.0, 0.0)
    }

    /// All three parameters equal, as in an equal-acceleration sweep.
    pub fn equal(r: f64) -> Result<Self, Error> {
        Self::new(r, r, r)
    }

    pub fn with_phases(
        r_a: f64,
        r_b: f64,
        r_c: f64,
        phi_a: f64,
        phi_b: f64,
        phi_c: f64,
    ) -> Result<Self, Error> {
        let r = [r_a, r_b, r_c];
        let phi = [phi_a, phi_b, phi_c];
        const NAMES: [&str; 3] = ["r_a", "r_b", "r_c"];
        const PHI_NAMES: [&str; 3] = ["phi_a", "phi_b", "phi_c"];
        for k in 0..3 {
            if !r[k].is_finite() {
                return Err(Error::NonFiniteParameter { name: NAMES[k] });
            }
            if !(0.0..=FRAC_PI_4).contains(&r[k]) {
                return Err(Error::AccelerationOutOfRange {
                    name: NAMES[k],
                    value: r[k],
                });
            }
            if !phi[k].is_finite() {
                return Err(Error::NonFiniteParameter { name: PHI_NAMES[k] });
            }
        }
        Ok(Self { r, phi })
    }

    pub fn r(&self, mode: usize) -> f64 {
        self.r[mode]
    }

    pub fn phi(&self, mode: usize) -> f64 {
        self.phi[mode]
    }
}

/// Builds the Minkowski-frame input state of a family, over modes a, b, c.
pub fn minkowski_state(family: StateFamily) -> PureState {
    let mut amps = vec![Complex64::new(0.0, 0.0); 8];
    match family {
        StateFamily::W => {
            let w = Complex64::new(1.0 / 3.0_f64.sqrt(), 0.0);
            // (|001> + |010> + |100|) / sqrt(3)
            amps[1] = w;
            amps[2] = w;
            amps[4] = w;
        }
        StateFamily::Ghz => {
            let w = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            // (|000> + |111>) / sqrt(2)
            amps[0] = w;
            amps[7] = w;
        }
        StateFamily::GhzLike => {
            let w = Complex64::new(0.5, 0.0);
            // (|001> + |010> + |100> + |111>) / 2
            amps[1] = w;
            amps[2] = w;
            amps[4] = w;
            amps[7] = w;
        }
    }
    PureState::new(
        vec![2, 2, 2],
        vec!["a".into(), "b".into(), "c".into()],
        amps,
    )
    .expect("family amplitudes are normalized by construction")
}

/// Labels of the 6-mode Rindler layout, in order.
pub const RINDLER_MODE_LABELS: [&str; 6] = ["a_I", "b_I", "c_I", "a_II", "b_II", "c_II"];

/// Applies the per-mode transformation to a 3-mode Minkowski state, producing
/// the 6-mode state over [a_I, b_I, c_I, a_II, b_II, c_II].
pub fn unruh_expand(state: &PureState, accel: &AccelerationTriple) -> Result<PureState, Error> {
    if state.mode_count() != 3 {
        return Err(Error::WrongModeCount {
            actual: state.mode_count(),
            expected: 3,
        });
    }

    // Per mode: the (region-I bit, region-II bit, weight) branches each
    // Minkowski bit expands into.
    let branches: Vec<[Vec<(usize, usize, Complex64)>; 2]> = (0..3)
        .map(|k| {
            let (c, s) = (accel.r(k).cos(), accel.r(k).sin());
            let phase = Complex64::from_polar(1.0, -accel.phi(k));
            [
                vec![
                    (0, 0, Complex64::new(c, 0.0)),
                    (1, 1, phase * s),
                ],
                vec![(1, 0, Complex64::new(1.0, 0.0))],
            ]
        })
        .collect();

    let mut amps = vec![Complex64::new(0.0, 0.0); 64];
    for m in 0..8 {
        let alpha = state.amplitude(m);
        if alpha.norm_sqr() == 0.0 {
            continue;
        }
        let bits = [(m >> 2) & 1, (m >> 1) & 1, m & 1];
        for (a_i, a_ii, wa) in &branches[0][bits[0]] {
            for (b_i, b_ii, wb) in &branches[1][bits[1]] {
                for (c_i, c_ii, wc) in &branches[2][bits[2]] {
                    let idx = (a_i << 5) | (b_i << 4) | (c_i << 3) | (a_ii << 2) | (b_ii << 1) | c_ii;
                    amps[idx] += alpha * wa * wb * wc;
                }
            }
        }
    }

    PureState::new(
        vec![2; 6],
        RINDLER_MODE_LABELS.iter().map(|s| s.to_string()).collect(),
        amps,
    )
}

/// Reduces the 6-mode Rindler state to the density operator of one region:
/// region I keeps modes {0, 1, 2}, region II keeps {3, 4, 5}.
pub fn region_density(state6: &PureState, region: RindlerRegion) -> Result<DensityMatrix, Error> {
    if state6.mode_count() != 6 {
        return Err(Error::WrongModeCount {
            actual: state6.mode_count(),
            expected: 6,
        });
    }
    let projector = DensityMatrix::from_pure(state6);
    match region {
        RindlerRegion::I => projector.partial_trace(&[0, 1, 2]),
        RindlerRegion::II => projector.partial_trace(&[3, 4, 5]),
    }
}

/// Full pipeline: input family, accelerated expansion, regional reduction.
pub fn accelerated_channel(
    family: StateFamily,
    accel: &AccelerationTriple,
    region: RindlerRegion,
) -> Result<DensityMatrix, Error> {
    let rindler = unruh_expand(&minkowski_state(family), accel)?;
    region_density(&rindler, region)
}
