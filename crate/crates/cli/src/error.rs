use thiserror::Error;

/// Process exit codes. Stable; documented in the README.
pub mod exit {
    pub const OK: i32 = 0;
    /// A bound or claim was checked and did not hold.
    pub const VERDICT_FAILURE: i32 = 1;
    /// Malformed input, bad flags, or an input outside the requested mode.
    pub const INPUT: i32 = 2;
    /// A resource cap was hit (variables, generators, lattice size, overflow).
    pub const RESOURCE: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{origin}:{line}:{column}: {message}")]
    Parse {
        origin: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Engine(#[from] monostab::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) | CliError::Io { .. } => exit::INPUT,
            CliError::Engine(e) => match e {
                monostab::Error::Resource(_) | monostab::Error::Overflow => exit::RESOURCE,
                monostab::Error::Violation(_) => exit::VERDICT_FAILURE,
                monostab::Error::DimensionMismatch { .. }
                | monostab::Error::Invalid(_)
                | monostab::Error::Mode(_) => exit::INPUT,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
