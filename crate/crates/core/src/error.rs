use thiserror::Error;

use crate::cover::SpecViolation;
use crate::digraph::OreMin;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a digraph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("endpoints must differ, got {vertex} twice")]
    SameVertex { vertex: usize },
    #[error("overlap {overlap} exceeds min({a}, {b})")]
    InvalidOverlap { a: usize, b: usize, overlap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("invalid cover spec: {0:?}")]
    InvalidSpec(Vec<SpecViolation>),
    #[error("exact search supports at most {max} vertices, got {order}")]
    TooLarge { order: usize, max: usize },
    #[error("order {order} is too small for k = {k} (needs at least {required})")]
    OrderTooSmall { order: usize, k: usize, required: usize },
}

/// Why a constructive solver refused an instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Precondition {
    #[error("invalid cover spec: {0:?}")]
    InvalidSpec(Vec<SpecViolation>),
    #[error("order {order} below required {required}")]
    Order { order: usize, required: usize },
    #[error("order {order} must equal {required}")]
    ExactOrder { order: usize, required: usize },
    #[error("minimum semi-degree {found} below required {required}")]
    SemiDegree { found: usize, required: usize },
    #[error("Ore minimum {found} below required {required}")]
    Ore { found: OreMin, required: usize },
    #[error("k = {k} is outside the supported range {min}..")]
    PathCount { k: usize, min: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("precondition violated: {0}")]
    Precondition(#[from] Precondition),
    /// A step that the hypothesis guarantees did not go through. This is a
    /// bug in the solver, never a property of the input.
    #[error("internal defect: {0}")]
    Defect(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("parameters n = {n}, k = {k} outside the family's range: {reason}")]
    OutOfRange { n: usize, k: usize, reason: &'static str },
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid digraph: {0}")]
    Graph(#[from] GraphError),
    #[error("unknown cover kind {0:?}")]
    UnknownKind(String),
    #[error("invalid field: {0}")]
    Field(String),
}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        ParseError::Syntax { line: e.line(), column: e.column(), message: e.to_string() }
    }
}
