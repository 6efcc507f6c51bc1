use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] systole_core::Error),

    #[error("cannot write {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{0} check(s) failed")]
    VerifyFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use systole_core::Error as E;
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Usage(_) | CliError::Core(E::InvalidParams(_)) => 2,
            CliError::Core(E::Domain { .. } | E::OutOfDomain(_)) => 3,
            CliError::Core(E::NoValidRoot(_)) => 4,
            CliError::Io { .. } => 5,
        }
    }
}
