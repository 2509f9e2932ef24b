use thiserror::Error;

/// Errors raised by constructors and operations on states and matrices.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("matrix is {rows}x{cols} but a square matrix is required")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: relative asymmetry {asymmetry:.3e} exceeds {tolerance:.1e}")]
    NotHermitian { asymmetry: f64, tolerance: f64 },

    #[error("matrix dimension {dim} exceeds the supported maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal mass {off_diagonal:.3e})")]
    EigenNoConvergence { sweeps: usize, off_diagonal: f64 },

    #[error("non-finite entry at ({row}, {col})")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("subsystem index {index} out of range for {count} subsystems")]
    SubsystemOutOfRange { index: usize, count: usize },

    #[error("the set of kept subsystems must not be empty")]
    EmptyKeepSet,

    #[error("subsystem dimensions {dims:?} multiply to {product}, but the matrix dimension is {matrix_dim}")]
    SubsystemDimsMismatch {
        dims: Vec<usize>,
        product: usize,
        matrix_dim: usize,
    },

    #[error("trace is {trace} but must be 1 within {tolerance:.1e}")]
    TraceNotUnit { trace: f64, tolerance: f64 },

    #[error("minimum eigenvalue {min_eigenvalue:.3e} is below the physicality floor {floor:.1e}")]
    NotPositiveSemidefinite { min_eigenvalue: f64, floor: f64 },

    #[error("state norm is {norm} but must be 1 within {tolerance:.1e}")]
    NormNotUnit { norm: f64, tolerance: f64 },

    #[error("state has {actual} modes but {expected} are required")]
    WrongModeCount { actual: usize, expected: usize },

    #[error("acceleration parameter {name} = {value} is outside [0, pi/4]")]
    AccelerationOutOfRange { name: &'static str, value: f64 },

    #[error("non-finite parameter {name}")]
    NonFiniteParameter { name: &'static str },

    #[error("amplitude count {actual} does not match mode dimensions (product {expected})")]
    AmplitudeCountMismatch { actual: usize, expected: usize },

    #[error("state dimension {state_dim} does not match density operator dimension {density_dim}")]
    StateDensityMismatch { state_dim: usize, density_dim: usize },
}
