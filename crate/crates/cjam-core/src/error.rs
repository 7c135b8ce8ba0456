//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A null-space basis needs at least two dimensions to exist.
    #[error("no null space degrees of freedom (dimension {0} < 2)")]
    NoNullSpace(usize),

    /// Channel or beamforming vectors must be nonzero.
    #[error("zero vector where a nonzero channel is required")]
    ZeroVector,

    /// Operation requires a square matrix.
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    /// Hermitian input expected but the asymmetry exceeds tolerance.
    #[error("matrix is not Hermitian within tolerance")]
    NotHermitian,

    /// Covariance with a significantly negative eigenvalue.
    #[error("covariance not PSD")]
    CovarianceNotPsd,

    /// The iterative eigensolver did not reach its accuracy contract.
    #[error("eigendecomposition failed to meet accuracy bounds")]
    EigenFailed,

    /// Input covariance violates the transmit-power normalization.
    #[error("input covariance must be Hermitian PSD with trace at most 1")]
    InvalidInputCovariance,

    /// SINR thresholds must be strictly positive.
    #[error("threshold chi must be positive, got {0}")]
    NonPositiveChi(f64),

    /// Outage budgets live strictly inside (0, 1).
    #[error("epsilon must be in (0, 1), got {0}")]
    EpsilonOutOfRange(f64),

    /// Malformed system description.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Dimension mismatch between related quantities.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}
