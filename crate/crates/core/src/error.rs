use thiserror::Error;

use crate::exact_poly::HForm;
use crate::expr_io::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("gcd of two zero forms")]
    ZeroGcd,

    #[error("division is not exact (remainder {remainder})")]
    NonExactDivision { remainder: HForm },

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("invalid moving form: {0}")]
    InvalidMovingForm(String),

    #[error("invalid curve parametrization: {0}")]
    InvalidCurve(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    /// Input `index` has t-degree `t_degree` > 1 (algorithm step 1).
    #[error("step 1: input {index} has t-degree {t_degree}; not in ruled normal form")]
    NotRuled { index: usize, t_degree: u32 },

    #[error("degenerate: {0}")]
    Degenerate(String),

    #[error("step 3: no coprime pair (f30, f31) found after {attempts} generic combinations")]
    NoCoprimeCombination { attempts: usize },

    #[error("{0}")]
    Input(String),

    /// A mathematical invariant was violated; indicates a bug rather than bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
