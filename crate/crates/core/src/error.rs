use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} must be positive")]
    NonPositive { what: &'static str },

    #[error("{a} is not a unit modulo {n}")]
    NotCoprime { a: i64, n: u64 },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("quadratic parameter d = {0} must be squarefree and not 0 or 1")]
    InvalidQuadratic(i64),

    #[error("p = {p} divides the cyclotomic parameter m = {m}; the residue norm formula needs p coprime to m")]
    PDividesM { p: u64, m: u64 },

    #[error("p = {p} divides exp(G) = {exponent}")]
    PDividesExponent { p: u64, exponent: u64 },

    #[error("p = 2 is only supported over the rational base")]
    EvenPrimeUnsupported,

    #[error("polynomial is not squarefree over F_{0}")]
    NotSquarefree(u64),

    #[error("integer overflow computing {0}")]
    Overflow(&'static str),

    #[error("internal arithmetic error: {0}")]
    Arithmetic(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("ledger error: {0}")]
    Ledger(String),
}
