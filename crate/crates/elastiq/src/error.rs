use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("grid too small: {n} nodes, need at least {min}")]
    GridTooSmall { n: usize, min: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("unsupported operator order {0}")]
    WrongOrder(u32),
    #[error("non-positive Jacobian at node ({i}, {j})")]
    NonPositiveJacobian { i: usize, j: usize },
    #[error("node ({i}, {j}) is not on the interface")]
    NotOnInterface { i: usize, j: usize },
    #[error("material tensor not positive definite at node ({i}, {j})")]
    IndefiniteTensor { i: usize, j: usize },
    #[error("non-positive interface scaling at interface node {0}")]
    NonPositiveScaling(usize),
    #[error("interface matrix is singular")]
    SingularInterfaceMatrix,
    #[error("non-finite state at step {step}")]
    NonFiniteState { step: usize },
    #[error("problem size {size} exceeds diagnostic cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("no phase-velocity root found in ({lo}, {hi})")]
    NoRootFound { lo: f64, hi: f64, scan: Vec<(f64, f64)> },
    #[error("mode null-vector residual {0:e} too large")]
    DegenerateNullspace(f64),
    #[error("config error in `{field}`: {msg}")]
    Config { field: String, msg: String },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn config(field: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Config { field: field.into(), msg: msg.into() }
    }

    /// Process exit status: 2 for bad input, 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config { .. } | Error::GridTooSmall { .. } | Error::WrongOrder(_) | Error::Io(_) => 2,
            _ => 3,
        }
    }
}
