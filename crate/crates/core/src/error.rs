use alloc::string::String;

/// Errors raised by the group, amalgam and tower machinery.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("images do not form a permutation of 1..{degree}")]
    InvalidPermutation { degree: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("closure exceeds the enumeration cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("not a subgroup of the ambient group: {0}")]
    NotSubgroup(String),
    #[error("no complement found: {0}")]
    NoComplement(String),
    #[error("unsupported Sylow computation: {0}")]
    UnsupportedSylow(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by {divisor} is not possible: q = {q} divides it")]
    DivisibleByQ { divisor: u64, q: u64 },
    #[error("denominator {den} is divisible by q = {q}")]
    DenominatorDivisibleByQ { den: String, q: u64 },
    #[error("q-valuation of zero is undefined")]
    ZeroValuation,
    #[error("element is not cyclically reduced")]
    NotCyclicallyReduced,
    #[error("operation needs an enumerable {0}")]
    NotEnumerable(&'static str),
    #[error("undecidable configuration: {0}")]
    Undecidable(String),
    #[error("hypothesis fails, witness {0}")]
    HypothesisFails(String),
    #[error("edge identification inconsistent: {0}")]
    EdgeInconsistent(String),
    #[error("invalid tower data: {0}")]
    InvalidTower(String),
    #[error("unknown suite {0}")]
    UnknownSuite(String),
    #[error("invalid endomorphism: {0}")]
    InvalidEndomorphism(String),
}

pub type Result<T> = core::result::Result<T, Error>;
