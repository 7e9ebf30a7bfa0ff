//! Exact rational and cyclotomic arithmetic. Nothing in the crate uses floats.

mod cyclo;
mod matrix;
mod poly;
pub mod rational;

pub use cyclo::{cyclotomic, lift_conductor, root_of_unity, CycloNumber, CyclotomicField};
pub use matrix::{det_exact, CycloMatrix};
pub use poly::{cyclotomic_polynomial, euler_phi, lcm, IntPolynomial};
pub use rational::{format_rational, parse_rational, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("conductor mismatch: {left} vs {right}; lift to a common conductor first")]
    ConductorMismatch { left: u64, right: u64 },
    #[error("cannot lift from conductor {from} to {to}: {from} does not divide {to}")]
    NotDivisible { from: u64, to: u64 },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("bad matrix shape: {0}")]
    Shape(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
}
