//! Exact rational and cyclotomic arithmetic, and p-adic valuations.

mod cyclotomic;
mod scalar;
mod valuation;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use scalar::{frac, int, ExactScalar};
pub use valuation::{integer_valuation, is_prime, padic_valuation, ExtendedValuation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid conductor {0}")]
    BadConductor(u64),
    #[error("conductor {conductor} needs {expected} coefficients, got {got}")]
    CoefficientCount { conductor: u64, expected: usize, got: usize },
}
