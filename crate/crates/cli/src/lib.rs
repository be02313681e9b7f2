//! Command-line driver: configuration, the staged pipeline and output files.

pub mod config;
pub mod pipeline;

pub use config::RunConfig;
pub use pipeline::{run, RunOptions, RunSummary, Stage};

/// Exit code for a completed run.
pub const EXIT_OK: i32 = 0;
/// Bad configuration or input data.
pub const EXIT_VALIDATION: i32 = 1;
/// A requested statistic could not be computed.
pub const EXIT_ESTIMATION: i32 = 2;
/// Filesystem or network failure.
pub const EXIT_IO: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Estimation(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::Estimation(_) => EXIT_ESTIMATION,
            CliError::Io(_) => EXIT_IO,
        }
    }

    /// Prefixes the message with where the error happened.
    pub fn context(self, what: &str) -> Self {
        match self {
            CliError::Validation(m) => CliError::Validation(format!("{what}: {m}")),
            CliError::Estimation(m) => CliError::Estimation(format!("{what}: {m}")),
            CliError::Io(m) => CliError::Io(format!("{what}: {m}")),
        }
    }
}

impl From<dynpanel::Error> for CliError {
    fn from(e: dynpanel::Error) -> Self {
        use dynpanel::Error as E;
        let msg = e.to_string();
        match e {
            E::Io(_) | E::Fetch { .. } | E::Parse { .. } => CliError::Io(msg),
            E::InsufficientData(_)
            | E::Degenerate(_)
            | E::MissingMoments(_)
            | E::UnderIdentified { .. }
            | E::Collinear(_)
            | E::EstimateState(_) => CliError::Estimation(msg),
            _ => CliError::Validation(msg),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
