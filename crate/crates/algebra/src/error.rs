use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Which resource limit a Gröbner computation ran into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BudgetKind {
    Pairs,
    Degree,
    WallTime,
}

impl fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BudgetKind::Pairs => write!(f, "S-pair limit"),
            BudgetKind::Degree => write!(f, "degree limit"),
            BudgetKind::WallTime => write!(f, "wall-clock limit"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// The computation stopped early. `pairs` and `basis_len` describe the
    /// partial state at the moment the limit was hit.
    #[error("budget exhausted ({kind}) after {pairs} S-pairs with {basis_len} basis elements")]
    BudgetExhausted {
        kind: BudgetKind,
        pairs: usize,
        basis_len: usize,
    },
    #[error("binomials live in rings with {expected} and {found} variables")]
    VariableCountMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("the zero vector does not define a binomial")]
    ZeroVector,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("exponent {0} does not fit in a monomial exponent")]
    ExponentTooLarge(String),
    #[error("matrix rows have inconsistent lengths")]
    RaggedMatrix,
    /// A computed toric generator is not in the kernel of its matrix.
    #[error("generator {0} is not in the kernel of the exponent matrix")]
    KernelViolation(String),
}
