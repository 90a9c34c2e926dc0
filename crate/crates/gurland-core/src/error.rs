use core::fmt;

/// Errors from construction and evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// Input outside a function's domain (non-positive, non-finite, odd or
    /// too-small exponent, invalid tolerance).
    Domain(&'static str),
    /// Result or request outside the supported range (Bernoulli table size,
    /// value not representable in binary64).
    Range(&'static str),
    /// Iteration cap reached before the requested tolerance.
    Convergence(&'static str),
    /// `x` and `y` coincide beyond the degeneracy threshold; the mean-value
    /// equation degenerates to `0 = 0` and `t(x,y)` is undetermined.
    DegeneratePoint,
    /// The sign condition `f(lo) >= 0 >= f(hi)` failed beyond tolerance.
    /// Signals an inconsistency upstream, not a valid outcome.
    BracketFailure,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Domain(msg) => write!(f, "domain error: {msg}"),
            Self::Range(msg) => write!(f, "range error: {msg}"),
            Self::Convergence(msg) => write!(f, "convergence error: {msg}"),
            Self::DegeneratePoint => write!(f, "degenerate: x = y"),
            Self::BracketFailure => write!(f, "bracket sign condition failed"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
