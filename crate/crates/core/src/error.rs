use thiserror::Error;

use crate::word::Word;

pub type Result<T> = std::result::Result<T, TreeError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TreeError {
    #[error("context {shorter} is a proper postfix of context {longer}")]
    PostfixViolation { shorter: Word, longer: Word },
    #[error("symbol index {symbol} is out of range for an alphabet of size {size}")]
    InvalidSymbol { symbol: usize, size: usize },
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("operation requires a nonempty tree")]
    EmptyTree,
    #[error("tree is not complete: node {node} lacks a child for symbol {symbol}")]
    NotComplete { node: Word, symbol: usize },
    #[error("trees are over different alphabets")]
    AlphabetMismatch,
    #[error("tree is not perfect-memory: no context is a postfix of {context}.{symbol}")]
    NotPerfectMemory { context: Word, symbol: usize },
    #[error("the smaller tree is not strictly contained at the root in the larger one")]
    NotContained,
    #[error("{0} is not a context of the tree")]
    UnknownContext(Word),
    #[error("power iteration did not converge within {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },
    #[error("transition table has no row for history {0}")]
    IncompleteTable(Word),
    #[error("invalid distribution at context {context}: {reason}")]
    InvalidDistribution { context: Word, reason: String },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("depth {depth} exceeds the limit of {limit}")]
    DepthLimit { depth: usize, limit: usize },
}
