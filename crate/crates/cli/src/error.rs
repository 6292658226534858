use std::io;

use clausen_core::Error as CoreError;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const IO: u8 = 1;
    /// Bad flags or a violated precondition.
    pub const PRECONDITION: u8 = 2;
    /// A series failed to converge within its limits.
    pub const NUMERIC: u8 = 3;
    /// A sweep found a point where the derived condition holds but the
    /// brute-force criterion fails.
    pub const VIOLATION: u8 = 4;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("invalid argument: {0}")]
    Usage(String),

    #[error("io error: {0}")]
    Io(#[from] io::Error),

    #[error("report parse error: {0}")]
    Parse(String),
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        if e.is_io_error() {
            match e.into_kind() {
                csv::ErrorKind::Io(e) => CliError::Io(e),
                _ => unreachable!(),
            }
        } else {
            CliError::Parse(e.to_string())
        }
    }
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e {
                CoreError::Domain(_) | CoreError::Precondition(_) | CoreError::Singular { .. } => exit::PRECONDITION,
                CoreError::NonConvergent(_)
                | CoreError::Divergent { .. }
                | CoreError::IterationCap { .. }
                | CoreError::Overflow(_) => exit::NUMERIC,
            },
            CliError::Usage(_) | CliError::Parse(_) => exit::PRECONDITION,
            CliError::Io(_) => exit::IO,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
