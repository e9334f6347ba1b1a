use thiserror::Error;

use crate::representation::Verdict;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0} is not allowed in a simple graph")]
    LoopEdge(usize),

    #[error("brute-force oracle limit exceeded: n = {n}, limit = {limit}")]
    OracleLimitExceeded { n: usize, limit: usize },

    #[error("exact treewidth limit exceeded: n = {n}, limit = {limit}")]
    ExactLimitExceeded { n: usize, limit: usize },

    #[error("tripartition search limit exceeded: n = {n}, limit = {limit}")]
    SearchLimitExceeded { n: usize, limit: usize },

    #[error("representation covers {rep} vertices but the graph has {graph}")]
    DomainMismatch { graph: usize, rep: usize },

    #[error("invalid tripartition: {0}")]
    InvalidPartition(String),

    #[error("invalid subdivision: {0}")]
    InvalidSubdivision(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("representation does not match the graph: {0}")]
    VerificationFailed(Verdict),

    #[error("pattern graph is not a cactus")]
    NotCactus,

    #[error("vertex set is not an atom: the holders of node {node} form a clique cutset")]
    NotAnAtom { node: usize },

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid color lists: {0}")]
    InvalidLists(String),

    #[error("color {color} of vertex {vertex} is outside 1..={k}")]
    ListColorOutOfRange { vertex: usize, color: u32, k: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
