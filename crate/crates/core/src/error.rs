use thiserror::Error;

use polyprime_algebra::AlgebraError;

use crate::grid::{Cell, Point};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridError {
    #[error("a polyomino needs at least one cell")]
    Empty,
    #[error("cells are not edge-connected")]
    Disconnected,
    #[error("{0} and {1} do not span an interval")]
    NotAnInterval(Point, Point),
    #[error("cells at walk positions {} and {index} are not edge-adjacent", index - 1)]
    NotAWalk { index: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("vertex {0} is not a vertex of the polyomino")]
    ForeignVertex(Point),
    #[error("not an L-configuration of this polyomino")]
    InvalidLConfiguration,
    #[error("ladder is invalid here: {0}")]
    InvalidLadder(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToricError {
    #[error("polyomino is neither simple nor a closed path")]
    NotInSupportedClass,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    /// A consequence of a theorem failed on a concrete input.
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("condition {index} violated: {detail}")]
    ConditionViolated { index: usize, detail: String },
    #[error(transparent)]
    Toric(#[from] ToricError),
    #[error("counterexample on {cells:?}: {detail}")]
    CounterexampleFound { cells: Vec<Cell>, detail: String },
}

impl FamilyError {
    pub(crate) fn condition(index: usize, detail: impl Into<String>) -> Self {
        FamilyError::ConditionViolated {
            index,
            detail: detail.into(),
        }
    }
}
