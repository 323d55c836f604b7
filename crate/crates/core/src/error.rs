use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("constant term is zero; element is not a unit")]
    NotAUnit,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("contract violated: {0}")]
    Contract(String),
    #[error("invalid variety descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("ideal is over Z/{ideal} but the check runs mod {q}")]
    ModulusMismatch { ideal: u64, q: u64 },
    /// A number the theory guarantees to be divisible by `q` was not.
    #[error("divisibility violated: {value} is not divisible by {modulus}")]
    DivisibilityViolation { value: BigInt, modulus: u64 },
    /// A rational expression the theory guarantees to be integral was not.
    #[error("integrality violated: {value} is not an integer")]
    NonIntegral { value: Rational },
    #[error("property violated: {0}")]
    PropertyViolation(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
