//! Crate-wide error type. Every fallible operation reports which contract
//! was violated; evaluation never panics on in-domain inputs.

use alloc::string::String;
use core::fmt;

/// Errors surfaced by exact evaluation and lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the operation's domain.
    Domain(String),
    /// An exact division by zero inside a closed form.
    DivisionByZero(String),
    /// A parameter value at which the closed form degenerates
    /// (e.g. x = 1 in the geometric kernel).
    SingularParameter(String),
    /// Series parameters outside the convergent regime of the 2F1 check.
    NonConvergent(String),
    /// Lookup of an unknown identity id, pair label, or parameter name.
    Unknown(String),
    /// Malformed textual input (sequence spec, rational literal, range).
    Parse(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn unknown(msg: impl Into<String>) -> Self {
        Error::Unknown(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::DivisionByZero(m) => write!(f, "division by zero: {m}"),
            Error::SingularParameter(m) => write!(f, "singular parameter: {m}"),
            Error::NonConvergent(m) => write!(f, "non-convergent: {m}"),
            Error::Unknown(m) => write!(f, "unknown: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
