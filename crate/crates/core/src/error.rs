use alloc::string::String;
use core::fmt;

/// Errors raised while validating inputs or evaluating criteria.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `(r, n)` does not satisfy `1 <= r < n`.
    InvalidContext { r: usize, n: usize },
    /// A verdict-bearing operation was asked about a pair with `gcd(r, n) != 1`.
    NotCoprime { r: usize, n: usize },
    /// A tuple failed the `I(r, n)` invariants.
    MalformedTuple(String),
    /// A partition shape does not fit the `r x (n - r)` box or is not non-decreasing.
    MalformedShape(String),
    /// Two values from different Grassmannians were combined.
    ContextMismatch,
    /// A simple reflection index outside `[1, n - 1]`.
    ReflectionOutOfRange { index: usize, n: usize },
    /// The two smoothness criteria disagreed. This is always a bug.
    CriteriaDisagreement(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidContext { r, n } => {
                write!(f, "invalid Grassmannian G({r},{n}): need 1 <= r < n")
            }
            Error::NotCoprime { r, n } => {
                write!(f, "r = {r} and n = {n} are not coprime")
            }
            Error::MalformedTuple(msg) => write!(f, "malformed tuple: {msg}"),
            Error::MalformedShape(msg) => write!(f, "malformed partition shape: {msg}"),
            Error::ContextMismatch => f.write_str("values belong to different Grassmannians"),
            Error::ReflectionOutOfRange { index, n } => {
                write!(f, "simple reflection s_{index} is out of range for n = {n}")
            }
            Error::CriteriaDisagreement(msg) => {
                write!(f, "smoothness criteria disagree: {msg}")
            }
        }
    }
}

impl core::error::Error for Error {}
