//! Error type shared by every fallible operation in the crate.

use std::fmt;

/// Everything that can go wrong when evaluating a function or running a
/// verification.  Each variant carries enough context to produce a useful
/// one-line message; none of them allocate on the success path.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The argument lies outside the mathematical domain of the operation
    /// (non-positive input to `digamma`, `x <= -1` for the shift function,
    /// zero index for a harmonic number, non-finite input, ...).
    Domain {
        /// Name of the operation that rejected the argument.
        op: &'static str,
        /// The offending value, as the caller supplied it.
        value: f64,
    },
    /// A derivative order larger than the implemented series/recurrence
    /// tables support.
    UnsupportedOrder {
        /// Name of the operation that rejected the order.
        op: &'static str,
        /// The requested order.
        order: u32,
        /// The largest order the operation accepts.
        max: u32,
    },
    /// A shift value outside the open interval `(1/2, exp(-gamma))`, the
    /// exact range swept by the optimal-shift function; no point maps to a
    /// shift outside it.
    ShiftOutOfRange {
        /// The rejected shift value.
        value: f64,
    },
    /// A structurally invalid grid request: non-finite endpoints, empty or
    /// single-point range, reversed endpoints, or a logarithmic grid with a
    /// non-positive start.
    InvalidGrid {
        /// Human-readable description of the defect.
        reason: &'static str,
    },
    /// A well-formed grid that extends outside the domain of the quantity
    /// being verified (for example sampling `x <= 0` for a bound that only
    /// holds on `x > 0`).
    GridDomain {
        /// Kebab-case name of the check whose domain was violated.
        check: &'static str,
        /// Smallest admissible grid start for that check.
        min_start: f64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { op, value } => {
                write!(f, "domain error: {op} is not defined at {value}")
            }
            Error::UnsupportedOrder { op, order, max } => {
                write!(f, "unsupported order: {op} accepts orders up to {max}, got {order}")
            }
            Error::ShiftOutOfRange { value } => {
                write!(f, "shift {value} outside the open interval (1/2, exp(-gamma))")
            }
            Error::InvalidGrid { reason } => write!(f, "invalid grid: {reason}"),
            Error::GridDomain { check, min_start } => {
                write!(f, "grid extends outside the domain of {check} (start must be >= {min_start})")
            }
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
