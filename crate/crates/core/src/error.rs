use thiserror::Error;

/// Errors raised by poset construction, counting and the Dedekind-number methods.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relation contains a directed cycle through point {0}")]
    Cycle(usize),
    #[error("point index {index} out of range for a poset with {len} points")]
    Index { index: usize, len: usize },
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("pivot subset is not a down-set of the induced sub-poset")]
    NotADownSet,
    #[error("down-set trace on the pivot set differs from the given down-set")]
    TraceMismatch,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("missing input: {0}")]
    MissingInput(String),
    #[error("residual shape violates the expected structure: {0}")]
    Shape(String),
    #[error("structural claim violated: {0}")]
    Structure(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
