use num_bigint::BigInt;
use thiserror::Error;

use crate::exact::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Product of two elements that both carry odd zeta symbols.
    #[error("product of symbolic terms z{left} * z{right} leaves the degree-1 ring")]
    SymbolicProduct { left: u32, right: u32 },

    #[error("linear system is rank deficient: rank {rank} < {columns} unknowns")]
    RankDeficient { rank: usize, columns: usize },

    #[error("linear system is inconsistent at row {row} (q^{exponent})")]
    Inconsistent { row: usize, exponent: usize },

    #[error("identity fails at q^{exponent}: {lhs} != {rhs}")]
    VerificationFailed {
        exponent: usize,
        lhs: String,
        rhs: String,
    },

    #[error("formula produced the non-integer value {value}")]
    NonIntegerResult { value: Rational },

    #[error("coefficient q^{requested} lies beyond truncation order {order}")]
    BeyondOrder { requested: usize, order: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn non_integer(value: Rational) -> Self {
        Error::NonIntegerResult { value }
    }
}

pub(crate) fn integral(value: Rational) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::non_integer(value))
    }
}
