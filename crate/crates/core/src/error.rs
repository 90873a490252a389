use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix must be square with n >= 1, got {rows} rows and a row of length {cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },

    #[error("tolerance must satisfy 0 < eps < 1, got {0}")]
    InvalidTolerance(f64),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("landau({n}) exceeds the configured cap {cap}")]
    LandauCap { n: usize, cap: usize },

    #[error(
        "cycle graph enumeration is limited to n <= {cap} (got n = {n}); P(n) has n! elements"
    )]
    EnumerationCap { n: usize, cap: usize },

    #[error("input is not unitary: ||q q^+ - u||_F = {distance:e}")]
    NotUnitary { distance: f64 },

    #[error("order not detected: no power q^p with p <= {p_max} equals the identity")]
    OrderNotDetected { p_max: usize },

    #[error(
        "ambiguous order: q^{order} is the identity but q^{divisor} is only {distance:e} away from it"
    )]
    AmbiguousOrder {
        order: usize,
        divisor: usize,
        distance: f64,
    },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownGate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
