use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A formula was evaluated outside the region where it has a real answer.
    #[error("domain error in {what}: {detail}")]
    Domain { what: &'static str, detail: String },

    /// User-supplied parameters violate a stated bound.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// The dual chart of a surface falls outside the (c, t) coordinate chart.
    #[error("dual coordinates leave the chart: {0}")]
    OutOfDomain(String),

    #[error("no valid root: {0}")]
    NoValidRoot(String),
}

impl Error {
    pub(crate) fn domain(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            what,
            detail: detail.into(),
        }
    }
}
