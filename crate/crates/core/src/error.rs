use alloc::string::String;
use core::fmt;

use crate::exactnum::Var;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operands live in different variable sets.
    Structural(String),
    /// A term left the exact window of a Laurent variable, or a requested
    /// coefficient lies beyond the known precision.
    WindowTooSmall { var: Var, exponent: i32 },
    NonInvertible(String),
    DivergentPochhammer,
    Domain(String),
    /// Exact linear solve hit a singular system at the sampled point.
    Singular,
    UnknownIdentity(String),
    NonInteger(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Structural(s) => write!(f, "structural error: {}", s),
            Error::WindowTooSmall { var, exponent } => {
                write!(f, "window too small: {}^{} needed", var, exponent)
            }
            Error::NonInvertible(s) => write!(f, "non-invertible series: {}", s),
            Error::DivergentPochhammer => f.write_str("divergent pochhammer"),
            Error::Domain(s) => write!(f, "domain error: {}", s),
            Error::Singular => f.write_str("singular linear system; resample the point"),
            Error::UnknownIdentity(s) => write!(f, "unknown identity: {}", s),
            Error::NonInteger(s) => write!(f, "non-integer coefficient: {}", s),
        }
    }
}

impl core::error::Error for Error {}

impl Error {
    pub fn is_window(&self) -> bool {
        matches!(self, Error::WindowTooSmall { .. })
    }
}

pub type Result<T> = core::result::Result<T, Error>;
