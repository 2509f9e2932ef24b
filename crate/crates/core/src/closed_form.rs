//! Closed-form channel expressions and the audit that checks them.
//!
//! The reduced density operators and fidelities of the accelerated channels
//! are usually quoted as explicit trigonometric formulas. This module
//! carries those formulas transcribed exactly as printed in the reference
//! derivation — suspected misprints included — so that [`audit`] can measure
//! them entry-by-entry against the first-principles pipeline
//! ([`crate::rindler::accelerated_channel`]), which is built from the
//! single-mode transformation alone.
//!
//! Where a printed form is not Hermitian, the audit compares its Hermitized
//! half `(M + M^dagger)/2` against the pipeline and reports the raw
//! asymmetry separately. A trace that drifts from one is likewise a finding,
//! not a crash.
//!
//! Throughout, `c[k] = cos r_k` and `s[k] = sin r_k` for modes k = a, b, c;
//! the printed forms carry no phases, so the audit samples phase-free
//! triples.

use std::fmt;

use crate::measures::fidelity;
use crate::rindler::{accelerated_channel, minkowski_state, AccelerationTriple, RindlerRegion, StateFamily};
use crate::rng::SplitMix64;
use crate::{Complex64, ComplexMatrix, Error};

/// Whether an id refers to a density-operator form or a fidelity form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedFormKind {
    Density,
    Fidelity,
}

/// One of the twelve transcribed forms: (family, region, kind).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClosedFormId {
    pub family: StateFamily,
    pub region: RindlerRegion,
    pub kind: ClosedFormKind,
}

impl ClosedFormId {
    pub fn new(family: StateFamily, region: RindlerRegion, kind: ClosedFormKind) -> Self {
        Self { family, region, kind }
    }

    /// All twelve ids: densities first, then fidelities, families in
    /// declaration order, region I before II.
    pub fn all() -> Vec<ClosedFormId> {
        let mut ids = Vec::with_capacity(12);
        for kind in [ClosedFormKind::Density, ClosedFormKind::Fidelity] {
            for family in StateFamily::ALL {
                for region in RindlerRegion::ALL {
                    ids.push(ClosedFormId::new(family, region, kind));
                }
            }
        }
        ids
    }
}

impl fmt::Display for ClosedFormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ClosedFormKind::Density => "density",
            ClosedFormKind::Fidelity => "fidelity",
        };
        write!(f, "{} {} region {}", kind, self.family, self.region)
    }
}

/// One entry where the Hermitized closed form and the pipeline disagree,
/// identified by its ket-string position.
#[derive(Debug, Clone, PartialEq)]
pub struct MismatchedEntry {
    pub row_ket: String,
    pub col_ket: String,
    pub closed_form: Complex64,
    pub pipeline: Complex64,
}

/// Outcome of auditing one closed form against the pipeline.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscrepancyReport {
    pub id: ClosedFormId,
    pub samples: usize,
    pub seed: u64,
    /// Largest entry difference between the Hermitized transcription and the
    /// pipeline density operator, over all samples. Zero for fidelity ids.
    pub max_abs_entry_error: f64,
    /// Largest |closed-form fidelity - pipeline fidelity| over all samples.
    /// Zero for density ids.
    pub max_fidelity_error: f64,
    /// Largest raw asymmetry |M[i][j] - conj(M[j][i])| of the transcription
    /// before Hermitization.
    pub max_asymmetry: f64,
    /// Largest |trace(M) - 1| of the raw transcription.
    pub max_trace_error: f64,
    /// Entries differing by more than 1e-10 at the worst sample.
    pub mismatched_entries: Vec<MismatchedEntry>,
    /// Free-text description of the recognized misprint, when there is one.
    pub residual_formula_note: String,
}

impl DiscrepancyReport {
    /// Largest error the report carries, for strict-mode gating.
    pub fn max_error(&self) -> f64 {
        self.max_abs_entry_error.max(self.max_fidelity_error)
    }
}

const ENTRY_MISMATCH_THRESHOLD: f64 = 1e-10;

// Three-qubit basis indices, big-endian, named by ket string.
const K000: usize = 0;
const K001: usize = 1;
const K010: usize = 2;
const K011: usize = 3;
const K100: usize = 4;
const K101: usize = 5;
const K110: usize = 6;
const K111: usize = 7;

fn ket_string(index: usize) -> String {
    format!("{index:03b}")
}

/// Evaluates the transcribed density-operator form of `(family, region)` at
/// the given accelerations. The result is exactly the printed expression:
/// it may be non-Hermitian or drift from unit trace where the print does.
pub fn closed_form_density(
    family: StateFamily,
    region: RindlerRegion,
    accel: &AccelerationTriple,
) -> ComplexMatrix {
    let c = [accel.r(0).cos(), accel.r(1).cos(), accel.r(2).cos()];
    let s = [accel.r(0).sin(), accel.r(1).sin(), accel.r(2).sin()];
    let entries = match (family, region) {
        (StateFamily::W, RindlerRegion::I) => density_w_i(&c, &s),
        (StateFamily::W, RindlerRegion::II) => density_w_ii(&c, &s),
        (StateFamily::Ghz, RindlerRegion::I) => density_ghz(&c, &s, RindlerRegion::I),
        (StateFamily::Ghz, RindlerRegion::II) => density_ghz(&c, &s, RindlerRegion::II),
        (StateFamily::GhzLike, RindlerRegion::I) => density_ghz_like_i(&c, &s),
        (StateFamily::GhzLike, RindlerRegion::II) => density_ghz_like_ii(&c, &s),
    };
    let mut m = ComplexMatrix::zeros(8, 8);
    for (row, col, value) in entries {
        m.set(row, col, Complex64::new(value, 0.0));
    }
    m
}

/// The W-state form in region I, prefactor 1/3. The |011><011| coefficient
/// is printed as c1^2(s3^2 + s1^2); the pipeline derivation gives
/// c1^2(s2^2 + s3^2). Kept as printed.
fn density_w_i(c: &[f64; 3], s: &[f64; 3]) -> Vec<(usize, usize, f64)> {
    let third = 1.0 / 3.0;
    [
        (K100, K100, c[1] * c[1] * c[2] * c[2]),
        (K100, K010, c[1] * c[0] * c[2] * c[2]),
        (K100, K001, c[2] * c[0] * c[1] * c[1]),
        (K010, K100, c[0] * c[1] * c[2] * c[2]),
        (K010, K010, c[0] * c[0] * c[2] * c[2]),
        (K010, K001, c[2] * c[1] * c[0] * c[0]),
        (K001, K100, c[0] * c[2] * c[1] * c[1]),
        (K001, K010, c[1] * c[2] * c[0] * c[0]),
        (K001, K001, c[0] * c[0] * c[1] * c[1]),
        (K101, K101, s[0] * s[0] * c[1] * c[1] + c[1] * c[1] * s[2] * s[2]),
        (K101, K011, c[1] * c[0] * s[2] * s[2]),
        (K101, K110, c[1] * c[2] * s[0] * s[0]),
        (K110, K110, s[1] * s[1] * c[2] * c[2] + s[0] * s[0] * c[2] * c[2]),
        (K110, K011, c[2] * c[0] * s[1] * s[1]),
        (K110, K101, c[2] * c[1] * s[0] * s[0]),
        (K011, K011, c[0] * c[0] * s[2] * s[2] + c[0] * c[0] * s[0] * s[0]),
        (K011, K101, c[0] * c[1] * s[2] * s[2]),
        (K011, K110, c[0] * c[2] * s[1] * s[1]),
        (K111, K111, s[1] * s[1] * s[2] * s[2] + s[0] * s[0] * s[2] * s[2] + s[0] * s[0] * s[1] * s[1]),
    ]
    .into_iter()
    .map(|(r, col, v)| (r, col, third * v))
    .collect()
}

/// The W-state form in region II, prefactor 1/3.
fn density_w_ii(c: &[f64; 3], s: &[f64; 3]) -> Vec<(usize, usize, f64)> {
    let third = 1.0 / 3.0;
    [
        (K000, K000, c[1] * c[1] * c[2] * c[2] + c[0] * c[0] * c[2] * c[2] + c[0] * c[0] * c[1] * c[1]),
        (K010, K010, s[1] * s[1] * c[2] * c[2] + s[1] * s[1] * c[0] * c[0]),
        (K010, K100, s[1] * s[0] * c[2] * c[2]),
        (K010, K001, s[1] * s[2] * c[0] * c[0]),
        (K001, K001, c[0] * c[0] * s[2] * s[2] + c[1] * c[1] * s[2] * s[2]),
        (K001, K100, s[2] * s[0] * c[1] * c[1]),
        (K001, K010, s[2] * s[1] * c[0] * c[0]),
        (K101, K101, s[0] * s[0] * s[2] * s[2]),
        (K101, K011, s[0] * s[1] * s[2] * s[2]),
        (K101, K110, s[2] * s[1] * s[0] * s[0]),
        (K100, K100, s[0] * s[0] * c[2] * c[2] + s[0] * s[0] * c[1] * c[1]),
        (K100, K010, s[0] * s[1] * c[2] * c[2]),
        (K100, K001, s[0] * s[2] * c[1] * c[1]),
        (K110, K110, s[0] * s[0] * s[1] * s[1]),
        (K110, K011, s[0] * s[2] * s[1] * s[1]),
        (K110, K101, s[1] * s[2] * s[0] * s[0]),
        (K011, K011, s[1] * s[1] * s[2] * s[2]),
        (K011, K101, s[1] * s[0] * s[2] * s[2]),
        (K011, K110, s[2] * s[0] * s[1] * s[1]),
    ]
    .into_iter()
    .map(|(r, col, v)| (r, col, third * v))
    .collect()
}

/// The GHZ form, prefactor 1/2: a diagonal lattice of cos/sin weights shared
/// by both regions, plus region-specific corner terms. In region II the
/// corner terms become s1 s2 s3 off-diagonals and a bare |000><000|.
fn density_ghz(c: &[f64; 3], s: &[f64; 3], region: RindlerRegion) -> Vec<(usize, usize, f64)> {
    let half = 0.5;
    let mut entries: Vec<(usize, usize, f64)> = Vec::with_capacity(11);
    let weight = |bit: usize, k: usize| if bit == 1 { s[k] * s[k] } else { c[k] * c[k] };
    for basis in 0..8 {
        let bits = [(basis >> 2) & 1, (basis >> 1) & 1, basis & 1];
        let diag = weight(bits[0], 0) * weight(bits[1], 1) * weight(bits[2], 2);
        entries.push((basis, basis, diag));
    }
    match region {
        RindlerRegion::I => {
            let cross = c[0] * c[1] * c[2];
            entries.push((K000, K111, cross));
            entries.push((K111, K000, cross));
            entries.push((K111, K111, 1.0));
        }
        RindlerRegion::II => {
            let cross = s[0] * s[1] * s[2];
            entries.push((K000, K111, cross));
            entries.push((K111, K000, cross));
            entries.push((K000, K000, 1.0));
        }
    }
    // Collapse duplicate positions (the corner terms add to the diagonal
    // lattice) before scaling.
    let mut m = vec![0.0f64; 64];
    for (r, col, v) in entries {
        m[r * 8 + col] += v;
    }
    m.into_iter()
        .enumerate()
        .filter(|(_, v)| *v != 0.0)
        .map(|(idx, v)| (idx / 8, idx % 8, half * v))
        .collect()
}

/// The GHZ-like form in region I, prefactor 1/4. The |001> row's <111|
/// coefficient is printed as c1 c2 c3, while its mirror in the |111> row is
/// c1 c2 (which is what the pipeline gives); both kept as printed, so the
/// raw form is asymmetric.
fn density_ghz_like_i(c: &[f64; 3], s: &[f64; 3]) -> Vec<(usize, usize, f64)> {
    let quarter = 0.25;
    [
        (K001, K001, c[0] * c[0] * c[1] * c[1]),
        (K001, K100, c[0] * c[2] * c[1] * c[1]),
        (K001, K010, c[1] * c[2] * c[0] * c[0]),
        (K001, K111, c[0] * c[1] * c[2]),
        (K010, K010, c[0] * c[0] * c[2] * c[2]),
        (K010, K001, c[2] * c[1] * c[0] * c[0]),
        (K010, K100, c[2] * c[2] * c[0] * c[1]),
        (K010, K111, c[0] * c[2]),
        (K100, K100, c[1] * c[1] * c[2] * c[2]),
        (K100, K001, c[2] * c[0] * c[1] * c[1]),
        (K100, K010, c[2] * c[2] * c[1] * c[0]),
        (K100, K111, c[1] * c[2]),
        (K101, K101, s[0] * s[0] * c[1] * c[1] + c[1] * c[1] * s[2] * s[2]),
        (K101, K110, c[1] * c[2] * s[0] * s[0]),
        (K101, K011, s[2] * s[2] * c[1] * c[0]),
        (K110, K110, s[1] * s[1] * c[2] * c[2] + s[0] * s[0] * c[2] * c[2]),
        (K110, K011, c[2] * c[0] * s[1] * s[1]),
        (K110, K101, c[2] * c[1] * s[0] * s[0]),
        (K011, K011, c[0] * c[0] * s[1] * s[1] + c[0] * c[0] * s[2] * s[2]),
        (K011, K101, s[2] * s[2] * c[0] * c[1]),
        (K011, K110, c[0] * c[2] * s[1] * s[1]),
        (K111, K111, s[0] * s[0] * s[1] * s[1] + s[0] * s[0] * s[2] * s[2] + s[1] * s[1] * s[2] * s[2] + 1.0),
        (K111, K010, c[0] * c[2]),
        (K111, K001, c[0] * c[1]),
        (K111, K100, c[1] * c[2]),
    ]
    .into_iter()
    .map(|(r, col, v)| (r, col, quarter * v))
    .collect()
}

/// The GHZ-like form in region II, prefactor 1/4.
fn density_ghz_like_ii(c: &[f64; 3], s: &[f64; 3]) -> Vec<(usize, usize, f64)> {
    let quarter = 0.25;
    [
        (K000, K000, c[0] * c[0] * c[1] * c[1] + c[0] * c[0] * c[2] * c[2] + c[1] * c[1] * c[2] * c[2] + 1.0),
        (K000, K101, s[0] * s[2]),
        (K000, K110, s[0] * s[1]),
        (K000, K011, s[1] * s[2]),
        (K001, K001, c[1] * c[1] * s[2] * s[2] + c[0] * c[0] * s[2] * s[2]),
        (K001, K100, s[0] * s[2] * c[1] * c[1]),
        (K001, K010, s[2] * s[1] * c[0] * c[0]),
        (K010, K010, s[1] * s[1] * c[2] * c[2] + c[0] * c[0] * s[1] * s[1]),
        (K010, K001, s[1] * s[2] * c[0] * c[0]),
        (K010, K100, s[1] * s[0] * c[2] * c[2]),
        (K100, K100, s[0] * s[0] * c[1] * c[1] + s[0] * s[0] * c[2] * c[2]),
        (K100, K010, s[0] * s[1] * c[2] * c[2]),
        (K100, K001, s[0] * s[2] * c[1] * c[1]),
        (K101, K101, s[0] * s[0] * s[2] * s[2]),
        (K101, K000, s[0] * s[2]),
        (K101, K011, s[0] * s[1] * s[2] * s[2]),
        (K101, K110, s[2] * s[1] * s[0] * s[0]),
        (K110, K110, s[0] * s[0] * s[1] * s[1]),
        (K110, K000, s[0] * s[1]),
        (K110, K011, s[0] * s[2] * s[1] * s[1]),
        (K110, K101, s[1] * s[2] * s[0] * s[0]),
        (K011, K011, s[1] * s[1] * s[2] * s[2]),
        (K011, K000, s[1] * s[2]),
        (K011, K101, s[2] * s[2] * s[1] * s[0]),
        (K011, K110, s[0] * s[2] * s[1] * s[1]),
    ]
    .into_iter()
    .map(|(r, col, v)| (r, col, quarter * v))
    .collect()
}

/// Evaluates the transcribed fidelity form of `(family, region)` at the
/// given accelerations, exactly as printed.
pub fn closed_form_fidelity(
    family: StateFamily,
    region: RindlerRegion,
    accel: &AccelerationTriple,
) -> f64 {
    let c = [accel.r(0).cos(), accel.r(1).cos(), accel.r(2).cos()];
    let s = [accel.r(0).sin(), accel.r(1).sin(), accel.r(2).sin()];
    let sq = |x: f64| x * x;
    match (family, region) {
        (StateFamily::W, RindlerRegion::I) => {
            (sq(c[0]) * sq(c[1])
                + sq(c[0]) * sq(c[2])
                + sq(c[1]) * sq(c[2])
                + 2.0 * c[0] * c[1] * sq(c[2])
                + 2.0 * c[0] * c[2] * sq(c[1])
                + 2.0 * c[2] * c[1] * sq(c[0]))
                / 9.0
        }
        // The printed form omits the s1^2 s2^2 s3^2 term the pipeline
        // produces; kept as printed.
        (StateFamily::Ghz, RindlerRegion::I) => {
            (1.0 + sq(c[0]) * sq(c[1]) * sq(c[2]) + 2.0 * c[0] * c[1] * c[2]) / 4.0
        }
        (StateFamily::GhzLike, RindlerRegion::I) => {
            (1.0 + sq(c[0]) * (sq(c[1]) + sq(c[2]))
                + sq(c[1]) * sq(c[2])
                + 2.0 * c[0] * (c[1] + c[2])
                + 2.0 * c[1] * c[2]
                + 2.0 * c[0] * c[1] * sq(c[2])
                + 2.0 * c[0] * c[2] * sq(c[1])
                + 2.0 * c[1] * c[2] * sq(c[0])
                + sq(s[0]) * (sq(s[1]) + sq(s[2]))
                + sq(s[1]) * sq(s[2]))
                / 16.0
        }
        // The 2 s1 s3 c2^2 term is printed twice; kept as printed.
        (StateFamily::W, RindlerRegion::II) => {
            (sq(s[0]) * (sq(c[1]) + sq(c[2]))
                + sq(s[1]) * (sq(c[0]) + sq(c[2]))
                + sq(s[2]) * (sq(c[0]) + sq(c[1]))
                + 2.0 * s[0] * s[2] * sq(c[1])
                + 2.0 * s[1] * s[2] * sq(c[0])
                + 2.0 * s[0] * s[2] * sq(c[1]))
                / 9.0
        }
        (StateFamily::Ghz, RindlerRegion::II) => {
            (1.0 + sq(c[0]) * sq(c[1]) * sq(c[2]) + sq(s[0]) * sq(s[1]) * sq(s[2])
                + 2.0 * s[0] * s[1] * s[2])
                / 4.0
        }
        (StateFamily::GhzLike, RindlerRegion::II) => {
            (sq(s[0]) * (sq(c[1]) + sq(c[2]))
                + sq(s[1]) * (sq(c[0]) + sq(c[2]))
                + sq(s[2]) * (sq(c[0]) + sq(c[1]))
                + 2.0 * s[1] * s[2] * sq(c[0])
                + 2.0 * s[0] * s[2] * sq(c[1])
                + 2.0 * s[0] * s[1] * sq(c[2]))
                / 16.0
        }
    }
}

fn known_misprint_note(id: &ClosedFormId) -> &'static str {
    match (id.family, id.region, id.kind) {
        (StateFamily::W, RindlerRegion::I, ClosedFormKind::Density) => {
            "|011><011| coefficient reads c1^2(s3^2 + s1^2); pipeline gives c1^2(s2^2 + s3^2), \
             so the printed trace drifts by (c1^2 s1^2 - c1^2 s2^2)/3"
        }
        (StateFamily::GhzLike, RindlerRegion::I, ClosedFormKind::Density) => {
            "|001><111| coefficient reads c1 c2 c3 but its mirror |111><001| reads c1 c2; \
             pipeline gives c1 c2 on both, so the printed form is asymmetric"
        }
        (StateFamily::Ghz, RindlerRegion::I, ClosedFormKind::Fidelity) => {
            "missing s1^2 s2^2 s3^2 / 4; residual equals s1^2 s2^2 s3^2 / 4 at every sample"
        }
        (StateFamily::W, RindlerRegion::II, ClosedFormKind::Fidelity) => {
            "2 s1 s3 c2^2 appears twice; pipeline has 2 s1 s2 c3^2 in place of the duplicate"
        }
        _ => "",
    }
}

/// Compares one closed form against the first-principles pipeline at
/// `sample_count` seed-determined acceleration triples in [0, pi/4]^3.
/// Identical `(id, sample_count, seed)` inputs yield identical reports.
pub fn audit(id: ClosedFormId, sample_count: usize, seed: u64) -> Result<DiscrepancyReport, Error> {
    let mut rng = SplitMix64::new(seed);
    let mut max_abs_entry_error = 0.0f64;
    let mut max_fidelity_error = 0.0f64;
    let mut max_asymmetry = 0.0f64;
    let mut max_trace_error = 0.0f64;
    let mut worst_entries: Vec<MismatchedEntry> = Vec::new();

    let top = std::f64::consts::FRAC_PI_4;
    for _ in 0..sample_count.max(1) {
        let accel = AccelerationTriple::new(
            rng.uniform(0.0, top),
            rng.uniform(0.0, top),
            rng.uniform(0.0, top),
        )?;

        match id.kind {
            ClosedFormKind::Density => {
                let raw = closed_form_density(id.family, id.region, &accel);
                let hermitized = raw.add(&raw.adjoint())?.scale(Complex64::new(0.5, 0.0));
                let pipeline = accelerated_channel(id.family, &accel, id.region)?;

                max_asymmetry = max_asymmetry.max(raw.hermiticity_gap());
                let trace = raw.trace()?;
                max_trace_error = max_trace_error.max((trace.re - 1.0).abs().max(trace.im.abs()));

                let mut sample_worst = 0.0f64;
                let mut sample_entries = Vec::new();
                for row in 0..8 {
                    for col in 0..8 {
                        let diff = (hermitized.get(row, col) - pipeline.matrix().get(row, col)).norm();
                        sample_worst = sample_worst.max(diff);
                        if diff > ENTRY_MISMATCH_THRESHOLD {
                            sample_entries.push(MismatchedEntry {
                                row_ket: ket_string(row),
                                col_ket: ket_string(col),
                                closed_form: hermitized.get(row, col),
                                pipeline: pipeline.matrix().get(row, col),
                            });
                        }
                    }
                }
                if sample_worst > max_abs_entry_error {
                    max_abs_entry_error = sample_worst;
                    worst_entries = sample_entries;
                }
            }
            ClosedFormKind::Fidelity => {
                let closed = closed_form_fidelity(id.family, id.region, &accel);
                let rho = accelerated_channel(id.family, &accel, id.region)?;
                let pipeline = fidelity(&rho, &minkowski_state(id.family))?;
                max_fidelity_error = max_fidelity_error.max((closed - pipeline).abs());
            }
        }
    }

    Ok(DiscrepancyReport {
        id,
        samples: sample_count.max(1),
        seed,
        max_abs_entry_error,
        max_fidelity_error,
        max_asymmetry,
        max_trace_error,
        mismatched_entries: worst_entries,
        residual_formula_note: known_misprint_note(&id).to_string(),
    })
}

impl fmt::Display for DiscrepancyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.id)?;
        writeln!(f, "samples: {} (seed {})", self.samples, self.seed)?;
        match self.id.kind {
            ClosedFormKind::Density => {
                writeln!(f, "max entry error (hermitized): {:.6e}", self.max_abs_entry_error)?;
                writeln!(f, "max asymmetry (raw):          {:.6e}", self.max_asymmetry)?;
                writeln!(f, "max trace error (raw):        {:.6e}", self.max_trace_error)?;
            }
            ClosedFormKind::Fidelity => {
                writeln!(f, "max fidelity error: {:.6e}", self.max_fidelity_error)?;
            }
        }
        if self.mismatched_entries.is_empty() {
            writeln!(f, "mismatched entries: none")?;
        } else {
            writeln!(f, "mismatched entries at worst sample:")?;
            for e in &self.mismatched_entries {
                writeln!(
                    f,
                    "  |{}><{}|  closed-form {}  pipeline {}",
                    e.row_ket,
                    e.col_ket,
                    format_complex(e.closed_form),
                    format_complex(e.pipeline),
                )?;
            }
        }
        if self.residual_formula_note.is_empty() {
            writeln!(f, "note: matches the pipeline within tolerance")
        } else {
            writeln!(f, "note: {}", self.residual_formula_note)
        }
    }
}

fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.9}", z.re)
    } else {
        format!("{:.9}{:+.9}i", z.re, z.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(family: StateFamily, region: RindlerRegion, kind: ClosedFormKind) -> ClosedFormId {
        ClosedFormId::new(family, region, kind)
    }

    #[test]
    fn twelve_ids() {
        assert_eq!(ClosedFormId::all().len(), 12);
    }

    #[test]
    fn w_region_i_at_rest_is_input_projector() {
        let m = closed_form_density(StateFamily::W, RindlerRegion::I, &AccelerationTriple::ZERO);
        let third = 1.0 / 3.0;
        for row in [K001, K010, K100] {
            for col in [K001, K010, K100] {
                assert!((m.get(row, col).re - third).abs() < 1e-15);
            }
        }
        assert!((m.trace().unwrap().re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn region_ii_forms_at_rest_are_vacuum() {
        for family in StateFamily::ALL {
            let m = closed_form_density(family, RindlerRegion::II, &AccelerationTriple::ZERO);
            assert!((m.get(K000, K000).re - 1.0).abs() < 1e-15, "{family}");
            assert!((m.trace().unwrap().re - 1.0).abs() < 1e-15, "{family}");
        }
    }

    #[test]
    fn fidelities_at_rest() {
        let zero = AccelerationTriple::ZERO;
        assert!((closed_form_fidelity(StateFamily::Ghz, RindlerRegion::I, &zero) - 1.0).abs() < 1e-15);
        assert!((closed_form_fidelity(StateFamily::Ghz, RindlerRegion::II, &zero) - 0.5).abs() < 1e-15);
        assert!(closed_form_fidelity(StateFamily::W, RindlerRegion::II, &zero).abs() < 1e-15);
        assert!(closed_form_fidelity(StateFamily::GhzLike, RindlerRegion::II, &zero).abs() < 1e-15);
    }

    #[test]
    fn ghz_region_i_fidelity_misprint_value() {
        let accel = AccelerationTriple::equal(std::f64::consts::FRAC_PI_4).unwrap();
        let f = closed_form_fidelity(StateFamily::Ghz, RindlerRegion::I, &accel);
        assert!((f - 0.4580266952966).abs() < 1e-12);
    }

    #[test]
    fn audit_is_deterministic() {
        let target = id(StateFamily::W, RindlerRegion::I, ClosedFormKind::Density);
        let a = audit(target, 20, 99).unwrap();
        let b = audit(target, 20, 99).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn audit_finds_exact_forms_exact() {
        for target in [
            id(StateFamily::Ghz, RindlerRegion::I, ClosedFormKind::Density),
            id(StateFamily::Ghz, RindlerRegion::II, ClosedFormKind::Density),
            id(StateFamily::W, RindlerRegion::II, ClosedFormKind::Density),
            id(StateFamily::GhzLike, RindlerRegion::II, ClosedFormKind::Density),
        ] {
            let report = audit(target, 25, 4242).unwrap();
            assert!(report.max_abs_entry_error <= 1e-12, "{target}: {:.3e}", report.max_abs_entry_error);
            assert!(report.mismatched_entries.is_empty());
        }
        for target in [
            id(StateFamily::W, RindlerRegion::I, ClosedFormKind::Fidelity),
            id(StateFamily::Ghz, RindlerRegion::II, ClosedFormKind::Fidelity),
            id(StateFamily::GhzLike, RindlerRegion::I, ClosedFormKind::Fidelity),
            id(StateFamily::GhzLike, RindlerRegion::II, ClosedFormKind::Fidelity),
        ] {
            let report = audit(target, 25, 4242).unwrap();
            assert!(report.max_fidelity_error <= 1e-12, "{target}: {:.3e}", report.max_fidelity_error);
        }
    }

    #[test]
    fn audit_flags_recognized_misprints() {
        let w_i = audit(id(StateFamily::W, RindlerRegion::I, ClosedFormKind::Density), 25, 7).unwrap();
        assert!(w_i.max_abs_entry_error > 1e-3);
        assert!(w_i.max_trace_error > 1e-3);
        assert!(!w_i.mismatched_entries.is_empty());
        assert!(w_i
            .mismatched_entries
            .iter()
            .all(|e| e.row_ket == "011" && e.col_ket == "011"));

        let gl_i = audit(id(StateFamily::GhzLike, RindlerRegion::I, ClosedFormKind::Density), 25, 7).unwrap();
        assert!(gl_i.max_asymmetry > 1e-3);
        assert!(gl_i
            .mismatched_entries
            .iter()
            .all(|e| (e.row_ket == "001" && e.col_ket == "111") || (e.row_ket == "111" && e.col_ket == "001")));

        let f_g_i = audit(id(StateFamily::Ghz, RindlerRegion::I, ClosedFormKind::Fidelity), 25, 7).unwrap();
        assert!(f_g_i.max_fidelity_error > 1e-3);
        assert!(f_g_i.residual_formula_note.contains("s1^2 s2^2 s3^2"));

        let f_w_ii = audit(id(StateFamily::W, RindlerRegion::II, ClosedFormKind::Fidelity), 25, 7).unwrap();
        assert!(f_w_ii.max_fidelity_error > 1e-4);
    }

    #[test]
    fn ghz_region_i_fidelity_residual_is_the_missing_term() {
        let mut rng = SplitMix64::new(31);
        let top = std::f64::consts::FRAC_PI_4;
        for _ in 0..50 {
            let accel = AccelerationTriple::new(
                rng.uniform(0.0, top),
                rng.uniform(0.0, top),
                rng.uniform(0.0, top),
            )
            .unwrap();
            let rho = accelerated_channel(StateFamily::Ghz, &accel, RindlerRegion::I).unwrap();
            let pipeline = fidelity(&rho, &minkowski_state(StateFamily::Ghz)).unwrap();
            let closed = closed_form_fidelity(StateFamily::Ghz, RindlerRegion::I, &accel);
            let missing = (accel.r(0).sin() * accel.r(1).sin() * accel.r(2).sin()).powi(2) / 4.0;
            assert!((pipeline - closed - missing).abs() < 1e-12);
        }
    }
}
