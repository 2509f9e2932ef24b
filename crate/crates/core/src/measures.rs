//! Channel quality measures: fidelity, von Neumann entropy, dense-coding
//! capacity, and negativity.
//!
//! Capacity of a two-qubit resource is `1 + S(rho_receiver) - S(rho_pair)`
//! bits and is reported unclamped. Negativity across a one-vs-rest split is
//! twice the absolute sum of the negative partial-transpose eigenvalues;
//! eigenvalues in `[-1e-12, 0)` are rounding noise from the partial trace
//! and count as zero.

use crate::eigen::hermitian_eig;
use crate::{DensityMatrix, Error, PureState, EIGENVALUE_FLOOR};

/// One-vs-rest negativities of a three-qubit state and their mean.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegativitySummary {
    pub n_a_bc: f64,
    pub n_b_ac: f64,
    pub n_c_ab: f64,
    pub mean: f64,
}

/// Pairwise dense-coding capacities of a three-qubit state and their mean.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacitySummary {
    pub c_ab: f64,
    pub c_ac: f64,
    pub c_bc: f64,
    pub average: f64,
}

/// Overlap `<psi| rho |psi>` of a channel output with a pure target,
/// clamped to [0, 1].
pub fn fidelity(rho: &DensityMatrix, target: &PureState) -> Result<f64, Error> {
    if rho.dim() != target.dim() {
        return Err(Error::StateDensityMismatch {
            state_dim: target.dim(),
            density_dim: rho.dim(),
        });
    }
    let amps = target.amplitudes();
    let mut overlap = 0.0;
    for i in 0..rho.dim() {
        if amps[i].norm_sqr() == 0.0 {
            continue;
        }
        for j in 0..rho.dim() {
            overlap += (amps[i].conj() * rho.matrix().get(i, j) * amps[j]).re;
        }
    }
    Ok(overlap.clamp(0.0, 1.0))
}

/// `S(rho) = -sum lambda log2 lambda` over the spectrum.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64, Error> {
    let eig = hermitian_eig(rho.matrix())?;
    let mut entropy = 0.0;
    for &lambda in &eig.eigenvalues {
        if lambda > EIGENVALUE_FLOOR {
            entropy -= lambda * lambda.log2();
        }
    }
    Ok(entropy)
}

/// Dense-coding capacity of a two-qubit resource state, in bits:
/// `log2(2) + S(rho_receiver) - S(rho_pair)`. May be negative; not clamped.
pub fn pair_capacity(rho_xy: &DensityMatrix, receiver: usize) -> Result<f64, Error> {
    if rho_xy.subsystem_count() != 2 {
        return Err(Error::WrongModeCount {
            actual: rho_xy.subsystem_count(),
            expected: 2,
        });
    }
    if receiver > 1 {
        return Err(Error::SubsystemOutOfRange {
            index: receiver,
            count: 2,
        });
    }
    let marginal = rho_xy.partial_trace(&[receiver])?;
    Ok(1.0 + von_neumann_entropy(&marginal)? - von_neumann_entropy(rho_xy)?)
}

/// Average dense-coding capacity over the pairs {ab, ac, bc} of a
/// three-qubit state, receiver being the second party of each pair.
pub fn average_capacity(rho_abc: &DensityMatrix) -> Result<CapacitySummary, Error> {
    if rho_abc.subsystem_count() != 3 {
        return Err(Error::WrongModeCount {
            actual: rho_abc.subsystem_count(),
            expected: 3,
        });
    }
    let c_ab = pair_capacity(&rho_abc.partial_trace(&[0, 1])?, 1)?;
    let c_ac = pair_capacity(&rho_abc.partial_trace(&[0, 2])?, 1)?;
    let c_bc = pair_capacity(&rho_abc.partial_trace(&[1, 2])?, 1)?;
    Ok(CapacitySummary {
        c_ab,
        c_ac,
        c_bc,
        average: (c_ab + c_ac + c_bc) / 3.0,
    })
}

/// Negativity of a three-qubit state across the bipartition separating
/// subsystem `part` from the other two.
pub fn negativity(rho_abc: &DensityMatrix, part: usize) -> Result<f64, Error> {
    if rho_abc.subsystem_count() != 3 {
        return Err(Error::WrongModeCount {
            actual: rho_abc.subsystem_count(),
            expected: 3,
        });
    }
    let transposed = rho_abc.partial_transpose(part)?;
    let eig = hermitian_eig(&transposed)?;
    let negative_mass: f64 = eig
        .eigenvalues
        .iter()
        .filter(|&&lambda| lambda < -EIGENVALUE_FLOOR)
        .map(|&lambda| -lambda)
        .sum();
    Ok(2.0 * negative_mass)
}

/// Negativity across all three one-vs-rest bipartitions plus their mean.
pub fn negativity_summary(rho_abc: &DensityMatrix) -> Result<NegativitySummary, Error> {
    let n_a_bc = negativity(rho_abc, 0)?;
    let n_b_ac = negativity(rho_abc, 1)?;
    let n_c_ab = negativity(rho_abc, 2)?;
    Ok(NegativitySummary {
        n_a_bc,
        n_b_ac,
        n_c_ab,
        mean: (n_a_bc + n_b_ac + n_c_ab) / 3.0,
    })
}
