use thiserror::Error;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    TooManyVertices(usize),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    Loop(usize),
    #[error("malformed graph6 input: {0}")]
    Graph6(String),
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("infeasible construction: {0}")]
    Infeasible(String),
    #[error("order {order} is above the cap of {cap} for {what}")]
    OrderCap {
        what: &'static str,
        order: usize,
        cap: usize,
    },
    #[error("forbidden family must contain at least one graph with an edge")]
    EmptyFamily,
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
