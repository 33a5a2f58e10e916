use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("edge endpoint {0} is not a declared vertex")]
    UnknownVertex(VertexId),

    #[error("vertex {0} has no assigned color")]
    MissingColor(VertexId),

    #[error("vertex {0} has no position in the placement")]
    MissingPosition(VertexId),

    #[error("degenerate segment: both endpoints are {0}")]
    DegenerateSegment(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("placement is not injective: vertices {0} and {1} share a point")]
    NotInjective(VertexId, VertexId),

    #[error("coloring is not proper: edge {0}-{1} is monochromatic")]
    ImproperColoring(VertexId, VertexId),

    #[error("coloring uses color {color}, but at most {limit} colors are allowed")]
    TooManyColors { color: usize, limit: usize },

    #[error("graph is not {colors}-colorable (chromatic number is larger)")]
    Uncolorable { colors: usize },

    #[error("graph is not planar")]
    NonPlanar,

    #[error("embedding still has violations after {0} refinement rounds")]
    RetriesExhausted(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid segment hypergraph: {0}")]
    InvalidSegmentHypergraph(String),

    #[error("edge {0} has a single vertex and can never be weakly colored")]
    SingletonEdge(usize),

    #[error("hypergraph is not {expected}-uniform (edge of size {found})")]
    NotUniform { expected: usize, found: usize },
}

impl Error {
    /// Process exit code used by the command-line tool.
    ///
    /// `1` is reserved for failed verification and never produced here.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Uncolorable { .. } | Error::NonPlanar | Error::RetriesExhausted(_) => 2,
            _ => 3,
        }
    }
}
