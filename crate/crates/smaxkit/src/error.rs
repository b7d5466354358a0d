use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree sequence is empty")]
    EmptySequence,
    #[error("degree sequence has no positive entries")]
    AllZeroSequence,
    #[error("degree sequence is not graphical: {0}")]
    NotGraphical(String),
    #[error("no feasible partner for node {node} with {remaining} stubs remaining")]
    Construction { node: usize, remaining: u32 },
    #[error(
        "instance too large for exhaustive enumeration: n={n} (max {max_n}), \
         degree sum={sum} (max {max_sum})"
    )]
    OracleTooLarge {
        n: usize,
        max_n: usize,
        sum: u64,
        max_sum: u64,
    },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Domain(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
