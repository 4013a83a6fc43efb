use thiserror::Error;

/// Every failure the engine can report. Verification failures carry the
/// witness that refutes the checked property.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient ring mismatch: {0}")]
    AmbientMismatch(String),

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("zero module: {0} is undefined")]
    ZeroModule(&'static str),

    #[error("matrix is not idempotent")]
    NotIdempotent,

    #[error("map is not surjective: rank {rank} modulo the maximal ideal, need {needed}")]
    NotSurjective { rank: usize, needed: usize },

    #[error("{element} is a zerodivisor on {on}; witness {witness}")]
    ZeroDivisor {
        element: String,
        on: String,
        witness: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resolution truncated at length {bound}: {what}")]
    Truncated { bound: usize, what: String },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("regular sequence search exhausted at degree bound {bound}: found {found} of {wanted}")]
    SearchExhausted {
        bound: i32,
        found: usize,
        wanted: usize,
    },

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Semantic(String),
}

impl Error {
    /// Process exit code associated with this failure class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::AmbientMismatch(_) => "ambient_mismatch",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::NotHomogeneous(_) => "not_homogeneous",
            Error::InvalidRing(_) => "invalid_ring",
            Error::ZeroModule(_) => "zero_module",
            Error::NotIdempotent => "not_idempotent",
            Error::NotSurjective { .. } => "not_surjective",
            Error::ZeroDivisor { .. } => "zerodivisor",
            Error::Precondition(_) => "precondition",
            Error::Truncated { .. } => "truncated",
            Error::Verification(_) => "verification",
            Error::SearchExhausted { .. } => "search_exhausted",
            Error::Parse { .. } => "parse",
            Error::Semantic(_) => "semantic",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Semantic(_) => 2,
            Error::Truncated { .. } => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
