//! Density operators over labeled tensor factors.
//!
//! Subsystem indexing is big-endian (subsystem 0 is the most significant
//! factor). Partial trace and partial transpose are done by index arithmetic
//! over multi-indices rather than by materializing permutation matrices,
//! which keeps the 64x64 case allocation-light.

use crate::eigen::hermitian_eig;
use crate::{Complex64, ComplexMatrix, Error, PureState, EQUALITY_TOL, HERMITICITY_TOL};

/// Eigenvalues may undershoot zero by at most this much and still count as
/// physical.
pub const POSITIVITY_FLOOR: f64 = 1e-10;

/// A validated density operator together with its tensor-factor dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    subsystem_dims: Vec<usize>,
}

impl DensityMatrix {
    /// Builds a density operator from an arbitrary matrix, checking all
    /// physicality invariants: square shape, subsystem dimensions, Hermiticity,
    /// unit trace, and positive semidefiniteness up to [`POSITIVITY_FLOOR`].
    pub fn new(matrix: ComplexMatrix, subsystem_dims: Vec<usize>) -> Result<Self, Error> {
        let dm = Self::new_unchecked_positivity(matrix, subsystem_dims)?;
        let eig = hermitian_eig(&dm.matrix)?;
        let min = eig.eigenvalues.first().copied().unwrap_or(0.0);
        if min < -POSITIVITY_FLOOR {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue: min,
                floor: POSITIVITY_FLOOR,
            });
        }
        Ok(dm)
    }

    /// Shape, Hermiticity and trace checks only. Used internally for outputs
    /// that are positive semidefinite by construction (pure-state projectors
    /// and their partial traces), where an eigensolve per call would be
    /// wasted work.
    fn new_unchecked_positivity(
        matrix: ComplexMatrix,
        subsystem_dims: Vec<usize>,
    ) -> Result<Self, Error> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let product: usize = subsystem_dims.iter().product();
        if product != matrix.rows() {
            return Err(Error::SubsystemDimsMismatch {
                dims: subsystem_dims,
                product,
                matrix_dim: matrix.rows(),
            });
        }
        let norm = matrix.frobenius_norm();
        let asymmetry = matrix.sub(&matrix.adjoint())?.frobenius_norm();
        if asymmetry > HERMITICITY_TOL * norm.max(1.0) {
            return Err(Error::NotHermitian {
                asymmetry: asymmetry / norm.max(1.0),
                tolerance: HERMITICITY_TOL,
            });
        }
        let trace = matrix.trace()?;
        if (trace.re - 1.0).abs() > EQUALITY_TOL || trace.im.abs() > EQUALITY_TOL {
            return Err(Error::TraceNotUnit {
                trace: trace.re,
                tolerance: EQUALITY_TOL,
            });
        }
        Ok(Self {
            matrix,
            subsystem_dims,
        })
    }

    /// Projector `|psi><psi|` of a pure state; rank one, so positive
    /// semidefinite without an eigensolve.
    pub fn from_pure(state: &PureState) -> Self {
        let dim = state.dim();
        let amps = state.amplitudes();
        let mut matrix = ComplexMatrix::zeros(dim, dim);
        for i in 0..dim {
            if amps[i].norm_sqr() == 0.0 {
                continue;
            }
            for j in 0..dim {
                matrix.set(i, j, amps[i] * amps[j].conj());
            }
        }
        Self {
            matrix,
            subsystem_dims: state.mode_dims().to_vec(),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn subsystem_dims(&self) -> &[usize] {
        &self.subsystem_dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn subsystem_count(&self) -> usize {
        self.subsystem_dims.len()
    }

    /// `Tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                sum += (self.matrix.get(i, j) * self.matrix.get(j, i)).re;
            }
        }
        sum
    }

    /// Traces out every subsystem not listed in `keep`. The kept subsystems
    /// stay in their original relative order; `keep` may list them in any
    /// order and duplicates are ignored.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix, Error> {
        let n = self.subsystem_count();
        if keep.is_empty() {
            return Err(Error::EmptyKeepSet);
        }
        let mut keep_mask = vec![false; n];
        for &k in keep {
            if k >= n {
                return Err(Error::SubsystemOutOfRange { index: k, count: n });
            }
            keep_mask[k] = true;
        }

        let strides = strides(&self.subsystem_dims);
        let kept: Vec<usize> = (0..n).filter(|&s| keep_mask[s]).collect();
        let traced: Vec<usize> = (0..n).filter(|&s| !keep_mask[s]).collect();
        let kept_dims: Vec<usize> = kept.iter().map(|&s| self.subsystem_dims[s]).collect();
        let traced_dims: Vec<usize> = traced.iter().map(|&s| self.subsystem_dims[s]).collect();
        let dim_keep: usize = kept_dims.iter().product();
        let dim_traced: usize = traced_dims.iter().product();

        // Offset of each kept (resp. traced) sub-index inside the full
        // basis index, so the hot loop below is pure integer adds.
        let keep_offsets = embedding_offsets(&kept_dims, &kept, &strides);
        let traced_offsets = embedding_offsets(&traced_dims, &traced, &strides);

        let mut out = ComplexMatrix::zeros(dim_keep, dim_keep);
        for (i, &row_keep) in keep_offsets.iter().enumerate() {
            for (j, &col_keep) in keep_offsets.iter().enumerate() {
                let mut sum = Complex64::new(0.0, 0.0);
                for &t in traced_offsets.iter().take(dim_traced) {
                    sum += self.matrix.get(row_keep + t, col_keep + t);
                }
                out.set(i, j, sum);
            }
        }
        DensityMatrix::new_unchecked_positivity(out, kept_dims)
    }

    /// Transposes the indices of a single subsystem, leaving the rest alone.
    /// The result is Hermitian but need not be positive, which is exactly
    /// what the negativity measure probes, so it is returned as a plain
    /// matrix.
    pub fn partial_transpose(&self, subsystem: usize) -> Result<ComplexMatrix, Error> {
        let n = self.subsystem_count();
        if subsystem >= n {
            return Err(Error::SubsystemOutOfRange {
                index: subsystem,
                count: n,
            });
        }
        let strides = strides(&self.subsystem_dims);
        let d_s = self.subsystem_dims[subsystem];
        let stride_s = strides[subsystem];
        let dim = self.dim();

        let mut out = ComplexMatrix::zeros(dim, dim);
        for row in 0..dim {
            let r_s = (row / stride_s) % d_s;
            let row_rest = row - r_s * stride_s;
            for col in 0..dim {
                let c_s = (col / stride_s) % d_s;
                let col_rest = col - c_s * stride_s;
                // Swap the subsystem's row/column index.
                out.set(
                    row_rest + c_s * stride_s,
                    col_rest + r_s * stride_s,
                    self.matrix.get(row, col),
                );
            }
        }
        Ok(out)
    }
}

/// Big-endian strides: subsystem `s` advances the basis index by the product
/// of all dimensions to its right.
fn strides(dims: &[usize]) -> Vec<usize> {
    let n = dims.len();
    let mut strides = vec![1usize; n];
    for s in (0..n.saturating_sub(1)).rev() {
        strides[s] = strides[s + 1] * dims[s + 1];
    }
    strides
}

/// For every multi-index over `dims` (at subsystem positions `positions`),
/// the contribution to the full basis index.
fn embedding_offsets(dims: &[usize], positions: &[usize], full_strides: &[usize]) -> Vec<usize> {
    let total: usize = dims.iter().product();
    let mut offsets = Vec::with_capacity(total);
    for flat in 0..total {
        let mut rem = flat;
        let mut offset = 0;
        for k in (0..dims.len()).rev() {
            offset += (rem % dims[k]) * full_strides[positions[k]];
            rem /= dims[k];
        }
        offsets.push(offset);
    }
    offsets
}
