use thiserror::Error;

use crate::weyl::Basis;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid character {found:?} at index {index}; words use only 'x' and 'D'")]
    Parse { index: usize, found: char },

    #[error("word `{0}` is not balanced")]
    Unbalanced(String),

    #[error("word `{0}` is not a Dyck word")]
    NotDyck(String),

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("word `{0}` does not start with x")]
    NotXInitial(String),

    #[error("word `{word}` has no expansion over the {basis} basis (stuck at k = {k})")]
    NotExpandable { word: String, basis: Basis, k: usize },

    #[error("host graph is not complete")]
    NotCompleteGraph,

    #[error("invalid partition text {0:?}")]
    PartitionParse(String),

    #[error("invalid Laurent polynomial text {0:?}")]
    PolyParse(String),

    #[error("{0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
