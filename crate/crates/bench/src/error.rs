use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("`{0}` is not a populated class of the grid")]
    UnknownClass(String),

    #[error("failed to spawn `{path}`: {source}")]
    Spawn { path: PathBuf, source: io::Error },

    #[error("external solver `{path}` exited with {status}: {stderr}")]
    ExternalFailed {
        path: PathBuf,
        status: String,
        stderr: String,
    },

    #[error("solver failed: {0}")]
    Solver(#[from] lde_core::Error),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
