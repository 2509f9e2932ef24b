//! Labeled tensor-product pure states.
//!
//! A [`PureState`] is an amplitude vector over a tensor product of modes.
//! Indexing is big-endian: mode 0 is the most significant factor, so the
//! basis index of `|b0 b1 ... bn-1>` is `sum b_k * 2^(n-1-k)` for qubit
//! modes. That matches the usual ket-string reading order.

use crate::{Complex64, Error, EQUALITY_TOL};

#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    mode_dims: Vec<usize>,
    mode_labels: Vec<String>,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Builds a normalized state; rejects amplitude/dimension mismatches and
    /// norms off unity by more than `1e-12`.
    pub fn new(
        mode_dims: Vec<usize>,
        mode_labels: Vec<String>,
        amplitudes: Vec<Complex64>,
    ) -> Result<Self, Error> {
        let expected: usize = mode_dims.iter().product();
        if amplitudes.len() != expected {
            return Err(Error::AmplitudeCountMismatch {
                actual: amplitudes.len(),
                expected,
            });
        }
        if mode_labels.len() != mode_dims.len() {
            return Err(Error::WrongModeCount {
                actual: mode_labels.len(),
                expected: mode_dims.len(),
            });
        }
        for (k, z) in amplitudes.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFiniteEntry { row: k, col: 0 });
            }
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > EQUALITY_TOL {
            return Err(Error::NormNotUnit {
                norm,
                tolerance: EQUALITY_TOL,
            });
        }
        Ok(Self {
            mode_dims,
            mode_labels,
            amplitudes,
        })
    }

    pub fn mode_count(&self) -> usize {
        self.mode_dims.len()
    }

    pub fn mode_dims(&self) -> &[usize] {
        &self.mode_dims
    }

    pub fn mode_labels(&self) -> &[String] {
        &self.mode_labels
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Total Hilbert-space dimension.
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitude(&self, basis_index: usize) -> Complex64 {
        self.amplitudes[basis_index]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unnormalized() {
        let amps = vec![Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)];
        let err = PureState::new(vec![2], vec!["a".into()], amps).unwrap_err();
        assert!(matches!(err, Error::NormNotUnit { .. }));
    }

    #[test]
    fn rejects_amplitude_count_mismatch() {
        let amps = vec![Complex64::new(1.0, 0.0)];
        let err = PureState::new(vec![2, 2], vec!["a".into(), "b".into()], amps).unwrap_err();
        assert!(matches!(err, Error::AmplitudeCountMismatch { actual: 1, expected: 4 }));
    }
}
