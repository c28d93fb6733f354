use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A graph or enumeration would exceed a configured size limit.
    #[error("{what}: {requested} vertices exceeds the cap of {cap}")]
    Capacity {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid vertex {vertex} for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}; only simple graphs are supported")]
    SelfLoop(usize),

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("inexact polynomial division (nonzero remainder): {0}")]
    InexactDivision(String),

    #[error("zero polynomial has no support")]
    ZeroPolynomial,

    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(String),

    #[error("polynomial has non-integral coefficient {0}")]
    NonIntegral(String),

    #[error("gamma = {0} is rejected: evaluation point must satisfy gamma not in {{0, -1, -2}}")]
    RejectedGamma(String),

    #[error("oracle answers are inconsistent: {0}")]
    OracleInconsistency(String),

    #[error("too few terms: need at least {needed}, got {got}")]
    TooFewTerms { needed: usize, got: usize },

    #[error("recurrence kind {recurrence} does not apply to {data} data")]
    KindMismatch {
        recurrence: &'static str,
        data: &'static str,
    },

    #[error("method {method} does not apply to {expr}")]
    MethodMismatch { method: String, expr: String },

    #[error("at n = {n}: {source}")]
    AtParameter { n: usize, source: Box<Error> },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        match self {
            Error::Capacity { .. } => true,
            Error::AtParameter { source, .. } => source.is_capacity(),
            _ => false,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
