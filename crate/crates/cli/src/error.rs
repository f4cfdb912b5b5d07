use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// A value in an input file or flag, named by its path such as
    /// `factors[0].a`.
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Core(#[from] qonsager_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Field {
            field: field.into(),
            message: message.into(),
        }
    }

    /// Prefixes the field path, as when a spec sits inside a sweep array.
    pub fn within(self, prefix: &str) -> Self {
        match self {
            CliError::Field { field, message } => CliError::Field {
                field: format!("{prefix}{field}"),
                message,
            },
            other => other,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
