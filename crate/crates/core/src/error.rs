use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error: {0}")]
    EdgeList(String),

    #[error("vertex index {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph on {0} vertex is too small for this analysis")]
    TrivialGraph(usize),

    #[error(
        "eigenvalue clusters at {lower} and {upper} are separated by {gap:e}, \
         less than 10x the merge tolerance {tol:e}; refusing to decompose"
    )]
    ClusterAmbiguity { lower: f64, upper: f64, gap: f64, tol: f64 },

    #[error("floating solve rejected: residual {residual:e} exceeds {limit:e}")]
    IllConditioned { residual: f64, limit: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("two-adic valuation of zero is undefined")]
    ZeroValuation,

    #[error("invalid sample grid: need at least 2 steps, got {0}")]
    BadGrid(usize),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
