use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// The rotation system is not a simple, symmetric, spherical embedding.
    #[error("malformed rotation system: {0}")]
    Structure(String),

    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The input does not satisfy the operation's precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("planar_code format error at byte {offset}: {reason}")]
    Format { offset: usize, reason: String },

    #[error("enumeration overflow at level faces={faces}: {reason}")]
    Overflow { faces: usize, reason: String },

    /// No strictly positive angle structure was found for this apex; another
    /// apex may still work.
    #[error("no strictly feasible angle structure for apex {apex}")]
    Infeasible { apex: usize },

    /// The maximizer reached the boundary of the angle polytope for `apex`.
    #[error("angle optimization degenerate for apex {apex}: {reason}")]
    Degenerate { apex: usize, reason: String },

    #[error("census incomplete for cutoff {cutoff}: missing face counts {missing:?}")]
    IncompleteCensus { cutoff: f64, missing: Vec<usize> },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Errors that another apex choice in the volume solver might avoid.
    pub fn is_retriable(&self) -> bool {
        matches!(self, Error::Infeasible { .. } | Error::Degenerate { .. })
    }
}
