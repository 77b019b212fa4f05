use crate::oracle::DiffReport;
use crate::ramsey::Coloring;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("arithmetic left the window: {0}")]
    Overflow(String),

    #[error("node budget of {budget} exhausted")]
    BudgetExceeded {
        budget: u64,
        /// Best lower bound and the coloring that realises it, when the
        /// search had produced one.
        partial: Option<Box<PartialSearch>>,
    },

    #[error("K must be nonempty")]
    EmptyK,

    #[error("D must be nonempty")]
    EmptyD,

    #[error("U must be nonempty")]
    EmptyU,

    #[error("generators {i} and {j} do not commute at state {x}")]
    NonCommuting { i: usize, j: usize, x: usize },

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("cover does not contain state {missing}")]
    NotACover { missing: usize },

    #[error("cocycle law fails at s={s:?}, t={t:?}, x={x}")]
    CocycleViolation { s: Vec<u64>, t: Vec<u64>, x: usize },

    #[error("base point {0} is not uniformly recurrent")]
    BaseNotRecurrent(usize),

    #[error("window too small: {0}")]
    WindowTooSmall(String),

    #[error("leading coefficient must be nonzero")]
    DegenerateLeadingCoefficient,

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("optimized and naive results disagree on {}", .0.operation)]
    Disagreement(Box<DiffReport>),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// State of an exhaustive search that ran out of budget.
#[derive(Debug, Clone)]
pub struct PartialSearch {
    pub lower_bound: u64,
    /// Longest copy-free coloring reached, if any cell was colored.
    pub witness: Option<Coloring>,
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
