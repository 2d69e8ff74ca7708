use thiserror::Error;

use crate::graph::Pair;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0}")]
    DuplicateEdge(Pair),
    #[error("pair {0} is not an edge of the graph")]
    NotASubset(Pair),
    #[error("edge set is empty")]
    EmptyEdgeSet,
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("{what} exceeds cap of {cap}")]
    CapExceeded { what: String, cap: u64 },
    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("image list is not a permutation")]
    NotAPermutation,
    #[error("m = {m} out of range for n = {n} (at most {max} pairs)")]
    MOutOfRange { n: usize, m: usize, max: usize },
    #[error("range error: {0}")]
    RangeError(String),
    #[error("{numerator} is not divisible by {denominator}")]
    NotDivisible {
        numerator: String,
        denominator: String,
    },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn cap(what: impl Into<String>, cap: u64) -> Self {
        Error::CapExceeded {
            what: what.into(),
            cap,
        }
    }
}
