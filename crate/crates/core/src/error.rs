use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    InvalidVertex { vertex: usize, vertex_count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(usize, usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("embedding is not planar: n - m + f = {euler}, expected 2")]
    NonPlanarEmbedding { euler: i64 },

    #[error("planarity assertion refuted: {0}")]
    NotPlanarEvidence(String),

    #[error("vertex {vertex} realizes a reducible configuration; discharging rules do not apply")]
    ConfigurationPresent { vertex: usize },

    #[error("move rejected: {0}")]
    MoveRejected(String),

    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },

    #[error("extending edge {u}-{v} needs a tier above T{max_tier}")]
    TierCapReached { u: usize, v: usize, max_tier: u8 },

    #[error("palette of {requested} colors exceeds the supported maximum of {max}")]
    PaletteTooLarge { requested: usize, max: usize },

    #[error("arithmetic overflow in charge bookkeeping")]
    Overflow,

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
