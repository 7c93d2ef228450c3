use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0}")]
    InvalidArgument(String),

    #[error("symbol {symbol} is outside the alphabet {{{low}, ..., {high}}}")]
    SymbolOutOfRange { symbol: i64, low: i64, high: i64 },

    #[error("{what} needs {required} items, above the configured limit of {limit}")]
    ResourceLimit {
        what: &'static str,
        required: String,
        limit: u64,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// The message used whenever a length or arity is zero.
    pub(crate) fn positive_n_m() -> Self {
        Error::invalid("n and m must be positive integers")
    }
}
