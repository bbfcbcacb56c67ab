use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("edge {edge} out of range (graph has {count} edges)")]
    EdgeOutOfRange { edge: usize, count: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("mixed set has length {got}, expected {expected}")]
    SetLength { got: usize, expected: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("leaf bag must hold exactly one vertex, got {0}")]
    LeafNotSingleton(usize),

    #[error("decomposition does not match graph: {0}")]
    Mismatch(String),

    #[error("unreachable table cell {table}[{row}][{col}]")]
    PoisonCell { table: &'static str, row: u8, col: u8 },

    #[error("root table has no feasible row")]
    Infeasible,

    #[error("oracle limited to {limit} elements, graph has {got}")]
    OracleTooLarge { got: usize, limit: usize },

    #[error("negative count after inverse transform")]
    NegativeCount,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
