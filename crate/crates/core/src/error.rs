use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge {edge} is a loop at vertex {vertex}")]
    SelfLoop { edge: usize, vertex: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{op} requires a simple graph, but the input has parallel edges")]
    NotSimple { op: &'static str },

    #[error("{op} requires a connected graph")]
    Disconnected { op: &'static str },

    #[error("the two vertices must differ (got {0} twice)")]
    SameVertex(usize),

    #[error("invalid parameters: {0}")]
    InvalidParameter(String),

    #[error("malformed graph6 at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("coloring does not match the graph: {0}")]
    ColoringMismatch(String),

    #[error("minimum cut between {u} and {v} has {size} edges, exceeding the bound {bound}")]
    CutTooLarge { u: usize, v: usize, size: usize, bound: usize },

    #[error("construction failed verification: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
