use thiserror::Error;

/// Failures reported by the exact kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is too large for residue matrices (must fit in 32 bits)")]
    PrimeTooLarge(u64),
    #[error("need at least 2 variables, got {0}")]
    TooFewVariables(usize),
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { got: usize, max: usize },
    #[error("argument a[{index}] = {value} exceeds p = {p}; the coefficient formula needs every a_i <= p")]
    ArgumentExceedsPrime { index: usize, value: u64, p: u64 },
    #[error("entry {index} is {value}, expected a value >= {min}")]
    EntryTooSmall { index: usize, value: u64, min: u64 },
    #[error("entry {index} is {value}, expected a value <= {max}")]
    EntryTooLarge { index: usize, value: u64, max: u64 },
    #[error("quotient ring has dimension {dim}, above the limit {max_dim}")]
    DimensionTooLarge { dim: u128, max_dim: usize },
    #[error("series order {order} is out of range [{min}, {max}]")]
    OrderOutOfRange { order: usize, min: usize, max: usize },
    #[error("series constant term must be {0}")]
    BadConstantTerm(&'static str),
    #[error("prime {p} is smaller than the largest exponent {max_d}")]
    PrimeBelowExponent { p: u64, max_d: u64 },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(&'static str),
}

impl Error {
    /// True for failures caused by a broken identity rather than by bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistent(_))
    }
}

pub type Result<T> = core::result::Result<T, Error>;
