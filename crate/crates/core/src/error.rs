use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count {0} outside 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency row {0} is not symmetric or has a diagonal bit")]
    InvalidAdjacency(usize),
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph6 decode error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("invalid parameters for {family}: {reason}")]
    BadParameters { family: String, reason: String },
    #[error("unknown graph family or spec `{0}`")]
    UnknownFamily(String),
    #[error("vertex list does not induce a path: {0}")]
    NotInducedPath(String),
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("eigenvalue index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("variable {0} has no value in the assignment")]
    Unassigned(String),
    #[error("polynomial parse error: {0}")]
    PolyParse(String),
    #[error("graphs of mixed orders in one stream ({0} vs {1})")]
    MixedOrders(usize, usize),
    #[error("built-in enumeration supports orders 1..=9, got {0}; supply a graph6 stream instead")]
    UnsupportedOrder(usize),
    #[error("source does not cover order {0}")]
    OrderNotCovered(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
