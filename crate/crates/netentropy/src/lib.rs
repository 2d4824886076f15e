//! File formats, experiment runners and the command-line front end for
//! [`netentropy_core`].

use std::path::Path;

pub use netentropy_core as core;

pub mod experiments;
pub mod io;

/// Process exit codes used by the `netentropy` binary.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    /// Unexpected internal failure.
    pub const INTERNAL: i32 = 1;
    /// Bad command-line usage (clap's own code).
    pub const USAGE: i32 = 2;
    pub const PARSE: i32 = 3;
    /// Invalid parameters or experiment configuration.
    pub const VALIDATION: i32 = 4;
    /// Input violates a metric's domain (disconnected, isolated vertex, ...).
    pub const DOMAIN: i32 = 5;
    pub const VERDICT_FAIL: i32 = 6;
    pub const VERDICT_INCONCLUSIVE: i32 = 7;
    pub const IO: i32 = 8;
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{path}: {source}")]
    IoAt {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex `{0}` is isolated; normalized Laplacian undefined")]
    IsolatedVertex(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Graph(#[from] netentropy_core::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io_at(path: &Path, source: std::io::Error) -> Self {
        Error::IoAt {
            path: path.display().to_string(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        use netentropy_core::Error as E;
        match self {
            Error::Io(_) | Error::IoAt { .. } | Error::Csv(_) => exit::IO,
            Error::Parse { .. } => exit::PARSE,
            Error::Config(_) => exit::VALIDATION,
            Error::IsolatedVertex(_) => exit::DOMAIN,
            Error::Json(_) => exit::INTERNAL,
            Error::Graph(e) => match e {
                E::InvalidEdge { .. } | E::SelfLoop(_) => exit::PARSE,
                E::InvalidParameter(_)
                | E::VertexOutOfRange { .. }
                | E::InvalidPermutation(_)
                | E::DimensionMismatch(..) => exit::VALIDATION,
                E::EigensolverFailure(_) => exit::INTERNAL,
                _ => exit::DOMAIN,
            },
        }
    }
}
