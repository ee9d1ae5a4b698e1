use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("checks do not commute: {0}")]
    Commutation(String),
    #[error("exact enumeration over a {dim}-dimensional space exceeds the threshold of {threshold}")]
    ThresholdExceeded { dim: usize, threshold: usize },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("X-check {x} and Z-check {z} overlap on {overlap} qubits (odd)")]
    OddOverlap { x: usize, z: usize, overlap: usize },
    #[error("color collision: {0}")]
    ColorCollision(String),
    #[error("map compatibility failed: {0}")]
    Compatibility(String),
    #[error("embedded complex differs from the input in column {column} of {what}")]
    Mismatch { what: String, column: usize },
    #[error("not a logical operator: {0}")]
    NotALogical(String),
    #[error("linear solve failed: {0}")]
    SolveFailed(String),
    #[error("check {z} is not reasonable")]
    Reasonableness { z: usize },
    #[error("face {face} of check {z} is not a simple cycle")]
    NonSimpleFace { z: usize, face: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}
