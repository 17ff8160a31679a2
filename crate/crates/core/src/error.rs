use thiserror::Error;

/// Errors raised by field, ring and algebra operations, and by the
/// expression parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different coefficient fields")]
    MixedFields,
    #[error("operation is undefined at zero")]
    ZeroInput,
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("gcd of an all-zero family")]
    AllZero,
    #[error("multivariate gcd is only supported for unit or monomial inputs")]
    UnsupportedMultivariateGcd,
    #[error("negative exponent on non-unit image of variable `{0}`")]
    NegativeExponentOnNonUnit(String),
    #[error("sigma acts as the identity on every sampled monomial")]
    SigmaIsIdentityOnSample,
    #[error("g override `{0}` is not an associate of the computed gcd")]
    InvalidOverride(String),
    #[error("sigma(g) is not divisible by g")]
    DeltaNotInRing,
    #[error(
        "singular Vandermonde system: terms {first} and {second} share eigenvalue {eigenvalue}"
    )]
    SingularSystem {
        first: String,
        second: String,
        eigenvalue: String,
    },
    #[error("sigma is not diagonal on monomials")]
    UnsupportedSigma,
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("ideal generator is zero")]
    ZeroGenerator,
    #[error("syntax error at position {position}: expected {expected}")]
    Syntax { position: usize, expected: String },
    #[error("exponent {exponent} not allowed for polynomial variable `{variable}` (position {position})")]
    ExponentDomain {
        variable: String,
        exponent: i64,
        position: usize,
    },
    #[error("unknown symbol `{symbol}` at position {position}")]
    UnknownSymbol { symbol: String, position: usize },
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{op}: {source}")]
    Context {
        op: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Wraps the error with the name of the operation that produced it.
    pub fn context(self, op: impl Into<String>) -> Self {
        Error::Context {
            op: op.into(),
            source: Box::new(self),
        }
    }

    /// Strips any context wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Context { source, .. } => source.root(),
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
