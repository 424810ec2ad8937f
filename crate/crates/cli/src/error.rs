use std::path::PathBuf;

/// Failures of a command, each tied to one process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot access {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid arguments: {0}")]
    Usage(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Io { .. } | Self::Parse(_) | Self::Usage(_) => 2,
            Self::Invariant(_) => 3,
        }
    }
}

impl From<croof::Error> for CliError {
    fn from(e: croof::Error) -> Self {
        Self::Invariant(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
