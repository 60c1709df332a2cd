use std::path::PathBuf;

use thiserror::Error;

/// Failures raised by oracles that are computed numerically.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("no feasible integer radius found below {limit} while bracketing M(x) at x = {x:?}")]
    BracketScan { x: Vec<f64>, limit: u64 },
    #[error("could not bracket g_{j}^-1({w}) after {doublings} doublings")]
    BracketDoubling { j: usize, w: f64, doublings: u32 },
    #[error("non-finite index {0:?}")]
    NonFiniteIndex(Vec<f64>),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("NaN produced by {0}")]
    NaN(&'static str),
    #[error("expected a vector of length {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("starting point is infeasible (objective is +inf)")]
    InfeasibleStart,
    #[error("starting point {0:?} lies outside the admissible box")]
    StartOutsideBox(Vec<f64>),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("oracle is infeasible at x = {0:?}")]
    OracleInfeasible(Vec<f64>),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
