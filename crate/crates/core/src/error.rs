use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("set spec syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("finite list is not strictly increasing: {prev} followed by {next}")]
    NotIncreasing { prev: u64, next: u64 },

    #[error("periodic set needs a nonempty period")]
    EmptyPeriod,

    #[error("shift offset {offset} exceeds the minimum {min} of the inner set")]
    ShiftTooLarge { offset: u64, min: u64 },

    #[error("the set is empty")]
    EmptySet,

    #[error("memory budget of {budget} bytes exceeded (needs {needed} bytes)")]
    Budget { needed: u64, budget: u64 },

    #[error("complement prefix does not list every missing element up to {n}")]
    PrefixNotExhaustive { n: u64 },

    #[error(
        "complement prefix within scan bound {scan_bound} is too short to resolve a case \
         (found {found:?})"
    )]
    InsufficientComplement { found: Vec<u64>, scan_bound: u64 },

    /// A proved statement failed on concrete data. Never expected on a correct build.
    #[error("theorem check failed: {0}")]
    TheoremViolated(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
