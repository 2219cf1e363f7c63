use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("singular matrix (rank {rank} < {dim})")]
    Singular { rank: usize, dim: usize },

    #[error("T is not an O-operator ({violations} identity instances fail)")]
    NotAnOOperator { violations: usize },

    #[error("form is not symplectic for this algebra ({violations} conditions fail)")]
    NotSymplectic { violations: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn dimension(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
