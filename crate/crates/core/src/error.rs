use thiserror::Error;

use crate::exact::Scalar;

/// A single failed identity. Indices count basis positions from 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("[e{i},e{j}] and [e{j},e{i}] disagree in component {k}")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("Jacobi identity fails on (e{i},e{j},e{k})")]
    JacobiViolation { i: usize, j: usize, k: usize },
    #[error("[e{i},e{j}] has a nonzero component along quotient slot {k}")]
    NotSubalgebra { i: usize, j: usize, k: usize },
    #[error("connection entry ({i},{j},{k}) must equal the bracket value {expected}, got {got}")]
    BottMismatch { i: usize, j: usize, k: usize, expected: Scalar, got: Scalar },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Lie pair: {}", list(.0))]
    InvalidPair(Vec<Violation>),
    #[error("invalid connection: {}", list(.0))]
    InvalidConnection(Vec<Violation>),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: String, right: String },
    #[error("hypothesis violated: {which}")]
    HypothesisViolated { which: String },
    #[error("parse error: {0}")]
    Parse(String),
}

fn list(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}
