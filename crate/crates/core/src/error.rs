use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {num_vertices} vertices")]
    VertexOutOfRange { vertex: Vertex, num_vertices: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("edge {{{0}, {1}}} is not present")]
    EdgeNotPresent(Vertex, Vertex),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(Vertex),

    #[error("empty list of parts")]
    EmptyList,
    #[error("part {part} has identical anchors on a multi-vertex graph")]
    DegenerateAnchors { part: usize },
    #[error("a circuit needs at least 3 parts, got {0}")]
    TooFewParts(usize),
    #[error("construction would create the duplicate edge {{{0}, {1}}}")]
    DuplicateEdgeCreated(Vertex, Vertex),
    #[error("part {part} has no anchor at position {position}")]
    MissingAnchor { part: usize, position: usize },

    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("no theorem for {family} with index {index}")]
    NoTheorem { family: String, index: String },
    #[error("outside the theorem's stated domain: {0}")]
    OutsideDomain(String),

    #[error("edge {{{0}, {1}}} is a pendant edge")]
    PendantEdge(Vertex, Vertex),
    #[error("pendant vertex {0} violates the bound's degree hypothesis")]
    PendantNeighbor(Vertex),
    #[error("edge {{{0}, {1}}} lies between two degree-2 neighbours of the deleted vertex")]
    TightNeighborEdge(Vertex, Vertex),
    #[error("graph is disconnected after the deletion")]
    NotConnectedAfterDeletion,
    #[error("part {0} is K_1")]
    PartIsK1(usize),
    #[error("{0} is not supported by this bound")]
    UnsupportedIndex(String),

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

impl Error {
    /// Attach a 1-based line number to a graph-building error.
    pub fn at_line(self, line: usize) -> Self {
        match self {
            Error::Parse { .. } => self,
            other => Error::Parse {
                line,
                reason: other.to_string(),
            },
        }
    }
}
