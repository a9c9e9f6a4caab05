use std::path::PathBuf;

/// Errors raised by the range-assignment library and CLI.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid network: {0}")]
    InvalidNetwork(String),

    #[error("node index {index} out of bounds for a network of {len} nodes")]
    IndexOutOfBounds { index: usize, len: usize },

    #[error("alpha: path-loss exponent {0} outside [2, 6]")]
    PathLoss(f64),

    #[error("invalid range assignment: {0}")]
    InvalidAssignment(String),

    #[error("source {source_index} is an end node; this operation needs an interior source")]
    EdgeSource { source_index: usize },

    #[error("source {source_index} is interior; this operation needs a source at an end node")]
    InteriorSource { source_index: usize },

    #[error("{field}: {message}")]
    Domain {
        field: &'static str,
        message: String,
    },

    #[error("max_n: oracle limited to {cap} nodes, network has {n}")]
    OracleCap { n: usize, cap: usize },

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("assignment from {algorithm} failed to reach every node")]
    Infeasible { algorithm: &'static str },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{context}: {message}")]
    Parse { context: String, message: String },
}

impl Error {
    pub(crate) fn domain(field: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            field,
            message: message.into(),
        }
    }

    /// True for failures of the environment rather than of the input.
    pub fn is_io(&self) -> bool {
        matches!(self, Error::Io { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
