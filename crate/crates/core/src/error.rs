use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree {0} is outside the supported range 2..=32")]
    DegreeOutOfRange(u32),

    #[error("modulus {modulus:#x} has degree {found}, expected {expected}")]
    ModulusDegree { modulus: u64, expected: u32, found: u32 },

    #[error("modulus {modulus:#x} is reducible: it has an irreducible factor of degree {factor_degree}")]
    ReducibleModulus { modulus: u64, factor_degree: u32 },

    #[error("value {bits:#x} is not an element of GF(2^{n})")]
    ElementOutOfRange { bits: u64, n: u32 },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("{m} does not divide the extension degree {n}")]
    NotADivisor { m: u32, n: u32 },

    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("polynomial has degree 0 in y; nothing to eliminate")]
    ConstantInY,

    #[error("{what} over GF(2^{n}) exceeds the scan budget (n <= {limit})")]
    Budget { what: &'static str, n: u32, limit: u32 },

    #[error("gcd({value}, {modulus}) = {gcd}, so {value} has no inverse modulo {modulus}")]
    NoModularInverse { value: u64, modulus: u64, gcd: u64 },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("family {family} is not defined for n = {n}: {reason}")]
    Inadmissible { family: String, n: u32, reason: String },

    #[error("no root of {what} exists in GF(2^{n})")]
    MissingRoot { what: String, n: u32 },

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("unknown identifier `{0}`")]
    UnknownId(String),

    #[error("report shape `{found}` cannot be compared with table {table}")]
    ShapeMismatch { found: String, table: String },

    #[error("{shape} search over GF(2^{n}) needs the long-run flag")]
    LongRunRequired { shape: String, n: u32 },

    #[error("worker pool: {0}")]
    Pool(String),
}

impl Error {
    pub(crate) fn parse(input: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse { input: input.into(), reason: reason.into() }
    }
}
