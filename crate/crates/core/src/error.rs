use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different variable registries")]
    RegistryMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable registry: {0}")]
    InvalidRegistry(String),
    #[error("negative exponent on non-invertible variable `{0}`")]
    NotInvertible(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("singular system: rank {rank} is below the {cols} unknowns")]
    Singular { rank: usize, cols: usize },
    #[error("inconsistent overdetermined system: residual row {row} does not vanish")]
    Inconsistent { row: usize },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("invalid profile: {0}")]
    Profile(String),
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
