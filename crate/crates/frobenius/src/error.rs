use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(frobenius_core::Error),
    #[error("{0}")]
    VerificationFailed(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for domain errors, 2 for usage errors, 3 for failed verifications.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) | CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::VerificationFailed(_) => 3,
        }
    }
}

impl From<frobenius_core::Error> for CliError {
    fn from(e: frobenius_core::Error) -> Self {
        match e {
            frobenius_core::Error::InvalidInput(msg) => CliError::Usage(msg.to_string()),
            other => CliError::Domain(other),
        }
    }
}
