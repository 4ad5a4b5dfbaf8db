//! Library side of the `rk4` command: file formats, sweeps and the atlas.

pub mod atlas;
pub mod document;
pub mod dot;
pub mod io;
pub mod sweep;

use thiserror::Error;

/// Every failure the command can report, each with its exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Parse(#[from] io::ParseError),
    #[error("schema mismatch: {0}")]
    Schema(String),
    #[error(transparent)]
    Core(#[from] rooted_k4::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(io::ParseError::Roots(_)) => 3,
            CliError::Core(rooted_k4::Error::ResourceLimit(_)) => 4,
            _ => 2,
        }
    }
}
