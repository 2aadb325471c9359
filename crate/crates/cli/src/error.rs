use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] egpkit::Error),

    /// A malformed or invalid document, located by a JSON path or position.
    #[error("{location}: {message}")]
    Document { location: String, message: String },

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(egpkit::Error::CapExceeded { .. }) => 2,
            _ => 1,
        }
    }

    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

/// Attaches a document location to a core error, keeping cap errors intact
/// so they still map to their own exit code.
pub(crate) fn at(location: impl ToString) -> impl FnOnce(egpkit::Error) -> CliError {
    move |e| match e {
        egpkit::Error::CapExceeded { .. } => CliError::Core(e),
        other => CliError::Document {
            location: location.to_string(),
            message: other.to_string(),
        },
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
