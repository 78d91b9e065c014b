use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{what} is out of domain: {detail}")]
    OutOfDomain { what: &'static str, detail: String },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    #[error("ratio magnitude {magnitude} >= 1 at m = {m}; prime source is corrupted")]
    RatioDomain { m: u64, magnitude: f64 },

    #[error("trigonometric argument {value} lies outside [-1, 1]")]
    TrigDomain { value: f64 },

    #[error("Euler factor singular at m = {m} (p = {p})")]
    EulerFactorSingular { m: u64, p: u64 },

    #[error("unsupported modulus {0}; expected 3 or 4")]
    UnsupportedModulus(u64),

    #[error("unknown format `{0}`; expected tsv, csv or json")]
    UnknownFormat(String),

    #[error("row mismatch: missing n = {missing:?}, extra n = {extra:?}")]
    RowMismatch { missing: Vec<u64>, extra: Vec<u64> },

    #[error("table kind mismatch: {0}")]
    KindMismatch(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
