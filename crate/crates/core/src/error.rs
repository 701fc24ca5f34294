use thiserror::Error;

use crate::hypergraph::Hyperedge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count must be at least 3, got {0}")]
    TooFewVertices(usize),

    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: i64, n: usize },

    #[error("hyperedge {0} repeats a vertex")]
    RepeatedVertex(String),

    #[error("hyperedge {0} has fewer than 2 vertices (loops are not allowed)")]
    Loop(String),

    #[error("hyperedge {0} occurs more than once (multiple edges are not allowed)")]
    DuplicateEdge(Hyperedge),

    #[error("full-cycle hyperedge has no section decomposition")]
    FullCycleHyperedge,

    #[error("hyperedge is empty")]
    EmptyHyperedge,

    #[error("invalid section profile: {0}")]
    InvalidProfile(String),

    #[error("n = {n} is out of range for variant {variant}: {requirement}")]
    OutOfRange {
        variant: &'static str,
        n: usize,
        requirement: String,
    },

    #[error("unknown construction variant `{0}`")]
    UnknownVariant(String),

    #[error("variant {variant} is {expected}-uniform, but k = {k} was requested")]
    UniformityMismatch {
        variant: &'static str,
        expected: usize,
        k: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("transformed hypergraph fails verification: {0}")]
    PostVerification(String),

    #[error("no vertex triple keeps the edge intersection hypergraph unchanged")]
    NoValidTriple,

    #[error("invalid search parameters: {0}")]
    SearchParameters(String),

    #[error("invalid linear program: {0}")]
    InvalidProgram(String),

    #[error("malformed hypergraph JSON: {0}")]
    Json(#[from] serde_json::Error),
}
