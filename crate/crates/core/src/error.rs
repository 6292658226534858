use alloc::string::String;

use num_complex::Complex64;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the domain of a special function.
    #[error("domain error: {0}")]
    Domain(String),

    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("series does not converge: {0}")]
    NonConvergent(String),

    /// The series was proven to diverge; `sign` is the sign of its terms.
    #[error("series diverges to {}infinity after {terms} terms", if *.sign < 0.0 { "-" } else { "+" })]
    Divergent { sign: f64, terms: usize },

    /// The remainder bound did not reach the requested tolerance before the
    /// term cap.
    #[error("iteration cap of {cap} terms reached (remainder bound {tail_bound:e})")]
    IterationCap { cap: usize, tail_bound: f64 },

    #[error("denominator vanishes near z = {z}")]
    Singular { z: Complex64 },

    #[error("overflow: {0}")]
    Overflow(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
