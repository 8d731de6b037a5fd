use thiserror::Error;

/// Error type shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("car {car}: tolerance {tolerance} is below preference {preference}")]
    ToleranceBelowPreference {
        car: usize,
        preference: usize,
        tolerance: usize,
    },
    #[error("inconsistent outcome: car {car} is not parked")]
    Inconsistent { car: usize },
    #[error("invalid Dyck word: {0}")]
    InvalidWord(String),
    #[error("preference list is not nondecreasing")]
    NotNondecreasing,
    #[error("preference list is not a parking function")]
    NotParkingFunction,
    #[error("tuple is not a Fubini ranking")]
    NotFubini,
    #[error("preference list is not a unit interval parking function")]
    NotUnitInterval,
    #[error("malformed arrangement: {0}")]
    MalformedArrangement(String),
    #[error("out of domain: {0}")]
    OutOfDomain(String),
    #[error("scale cap exceeded: {candidates} candidates over cap {cap}")]
    ScaleExceeded { candidates: u128, cap: u128 },
    #[error("exact division failed: {0}")]
    NonIntegerResult(String),
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
