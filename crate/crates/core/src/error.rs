use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("not a bijection: {0}")]
    NotBijective(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("degenerate double star <{left}, {right}>: need left + 2 <= right")]
    DegenerateStar { left: usize, right: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{family} construction failed validation: {detail}")]
    InvalidConstruction { family: String, detail: String },
    #[error("uncovered grid points: {0:?}")]
    Uncovered(Vec<(usize, usize)>),
    #[error("invalid layout: {0}")]
    InvalidLayout(String),
    #[error("{n} vertices exceeds the exact-search guard of {guard}; raise the guard to override")]
    GuardExceeded { n: usize, guard: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
