use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no points given")]
    EmptyInput,

    #[error("affine hull has dimension {hull_dim}, expected {ambient_dim}")]
    DimensionDeficient { hull_dim: usize, ambient_dim: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ambient dimension {dim} exceeds the configured cap of {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("the origin is not strictly interior to the polytope")]
    OriginNotInterior,

    #[error("dilation factor must be positive")]
    ZeroDilation,

    #[error("division by zero")]
    DivisionByZero,

    #[error("bounding box of {cells} cells exceeds the enumeration budget of {budget}")]
    BudgetExceeded { cells: String, budget: u64 },

    #[error("the dual polytope is not a lattice polytope")]
    DualNotLattice,

    #[error("half-space normal is not integral")]
    NonIntegerNormal,

    #[error("fitted coefficient delta[{i}][{r}] = {value} is not an integer")]
    NonIntegerDelta { i: usize, r: usize, value: String },

    #[error("coordinate magnitude exceeds machine integer range during enumeration")]
    CoordinateOverflow,

    #[error("instance generation exhausted after {attempts} attempts")]
    GenerationExhausted { attempts: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
