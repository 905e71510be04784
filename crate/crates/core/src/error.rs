use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not unitary (max deviation {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },

    /// The cubic has a (numerically) triple root; `root` is that root.
    #[error("degenerate cubic: triple root {root}")]
    DegenerateCubic { root: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("settings count m = {0} is invalid (need m >= 2)")]
    InvalidM(usize),

    #[error("settings count m = {0} is too large for exhaustive enumeration (max 8)")]
    TooManySettings(usize),

    #[error("invalid range: {0}")]
    InvalidRange(String),

    /// The closed form for the CH eigenvectors divides by a vanishing sine
    /// combination; the numeric eigensolver was used instead.
    #[error("degenerate angle configuration: closed-form eigenvectors are singular")]
    DegenerateConfiguration,

    #[error("state is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("multiport target is degenerate: free parameters with nonzero remainder")]
    DegenerateTarget,
}
