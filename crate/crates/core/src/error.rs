use thiserror::Error;

/// Errors produced by instance loading, validation, solving, and simulation.
#[derive(Debug, Error)]
pub enum Error {
    /// The document could not be decoded at all.
    #[error("parse error: {0}")]
    Parse(String),

    /// The document decoded but violates an instance invariant. The message
    /// names the violated invariant and the offending nodes.
    #[error("validation error: {0}")]
    Validation(String),

    /// The undirected pursuer graph does not span all nodes.
    #[error("disconnected pursuer graph: {0}")]
    Disconnected(String),

    /// An exact-oracle query exceeded its node or state budget.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// The instance is not a spider network.
    #[error("not a spider network: {0}")]
    NotASpider(String),

    /// A generator precondition does not hold.
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),

    /// A supplied distance table is not a metric.
    #[error("invalid metric: {0}")]
    InvalidMetric(String),

    /// Brute-force enumeration was asked for an instance beyond its size cap.
    #[error("instance too large: {0}")]
    TooLarge(String),

    /// A replayed policy has no decision for a reachable observation history.
    #[error("policy incomplete: {0}")]
    PolicyIncomplete(String),

    /// Solver labels exist but the decision records needed to build an
    /// executable policy are missing.
    #[error("policy unavailable: {0}")]
    PolicyUnavailable(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
