use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("refinement limit reached with error estimate {estimate:e} above tolerance {tol:e}")]
    NonConvergence { estimate: f64, tol: f64 },

    #[error("decay rate must be positive and finite, got {0}")]
    InvalidDecay(f64),

    #[error("tolerance {0:e} is outside the supported range")]
    InvalidTolerance(f64),

    #[error("{0}")]
    Domain(String),

    #[error("constraint {constraint} violated: relative mismatch {mismatch:e}")]
    ConstraintViolation { constraint: String, mismatch: f64 },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("identity {identity} has no parameter `{name}`")]
    UnknownParameter { identity: String, name: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
