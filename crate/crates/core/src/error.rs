use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ring spec {input:?}: {reason}")]
    Syntax { input: String, reason: String },

    #[error("modulus {0} is smaller than 2")]
    ModulusTooSmall(u64),

    #[error("ring spec has no factors")]
    EmptySpec,

    #[error("ring cardinality overflows u64")]
    CardinalityOverflow,

    #[error("element {element} does not belong to {spec}")]
    InvalidElement { spec: String, element: String },

    #[error("{0} is not von Neumann regular")]
    NotVonNeumannRegular(String),

    #[error("{0} has a composite modulus; split it into prime factors first")]
    NotSplit(String),

    #[error("{0} is an integral domain")]
    IsDomain(String),

    #[error("{spec} needs at least two field factors, found {found}")]
    TooFewFields { spec: String, found: usize },

    #[error("ring cardinality {cardinality} exceeds cap {cap}")]
    CardinalityCap { cardinality: u64, cap: u64 },

    #[error("graph has {vertices} vertices, cap is {cap}")]
    VertexCap { vertices: usize, cap: usize },

    #[error("odd-hole search gave up after {nodes} nodes")]
    SearchBudget { nodes: u64 },

    #[error("odd-cycle search needs an odd minimum length >= 5, got {0}")]
    InvalidMinLength(usize),

    #[error("vertex {vertex} has no remaining non-adjacent twin; quotient reduction is invalid")]
    ReductionHypothesis { vertex: String },

    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors raised by a size cap rather than by bad input.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::CardinalityCap { .. } | Error::VertexCap { .. } | Error::SearchBudget { .. }
        )
    }
}
