use thiserror::Error;

pub type Result<T> = std::result::Result<T, SpkError>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpkError {
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("variable `{var}` carries a negative exponent")]
    NegativeExponent { var: String },

    #[error("variable `{var}` has a negative exponent but is substituted by a non-unit-monomial")]
    NonMonomialSubstitution { var: String },

    #[error("variable `{0}` is not assigned a value")]
    UnassignedVariable(String),

    #[error("variable `{0}` is zero but raised to a negative power")]
    ZeroToNegativePower(String),

    #[error("polynomial is not univariate: {0}")]
    NotUnivariate(String),

    #[error("polynomial is not palindromic about {center}: {poly}")]
    NotPalindromic { poly: String, center: String },

    #[error("{family} at n={n} has {size} objects, exceeding the resource cap {cap}")]
    ResourceGuard {
        family: String,
        n: usize,
        size: String,
        cap: u64,
    },

    #[error("unknown grammar `{0}`")]
    UnknownGrammar(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("routes disagree for {what}: {detail}")]
    RouteDisagreement { what: String, detail: String },

    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial {0} is not real-rooted")]
    NotRealRooted(String),

    #[error("invalid object: {0}")]
    InvalidObject(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for SpkError {
    fn from(e: std::io::Error) -> Self {
        SpkError::Io(e.to_string())
    }
}
