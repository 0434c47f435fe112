//! The exact integer scalar the matrix code is generic over.
//!
//! Floating point types are deliberately not admitted: kernels of exponent
//! matrices must be exact lattices, not approximate subspaces. Machine
//! integers are admitted through checked arithmetic, so an overflow
//! surfaces as an error instead of a wrong lattice.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::AlgebraError;

pub trait ExactInteger:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + FromPrimitive
    + ToPrimitive
    + CheckedAdd
    + CheckedSub
    + CheckedMul
{
    fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_add(other).ok_or(AlgebraError::Overflow)
    }

    fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_sub(other).ok_or(AlgebraError::Overflow)
    }

    fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_mul(other).ok_or(AlgebraError::Overflow)
    }

    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("every exact integer type holds an i64")
    }
}

impl<T> ExactInteger for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + CheckedAdd
        + CheckedSub
        + CheckedMul
{
}
