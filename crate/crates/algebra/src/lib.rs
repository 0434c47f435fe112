//! Exact arithmetic for pure-difference binomial ideals.
//!
//! The crate covers the algebra behind toric ideals of monomial maps:
//! integer kernels of exponent matrices ([`matrix`]), dense monomials and
//! binomials with coefficients `+1`/`-1` ([`monomial`], [`binomial`]),
//! monomial orders ([`order`]), a budgeted Buchberger algorithm that stays
//! inside the class of binomials ([`groebner`]) and saturation by variables
//! ([`saturation`]).
//!
//! Matrix code is generic over an exact integer scalar (see [`scalar`]);
//! the aliases below fix the two scalars used in practice.

pub mod binomial;
pub mod error;
pub mod groebner;
pub mod matrix;
pub mod monomial;
pub mod order;
pub mod saturation;
pub mod scalar;

pub use binomial::Binomial;
pub use error::{AlgebraError, BudgetKind};
pub use groebner::{buchberger, buchberger_metered, ideal_equal, normal_form, Budget, GroebnerBasis, Meter};
pub use matrix::{integer_kernel, IntMatrix};
pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use saturation::{
    lattice_basis_ideal, saturate, saturate_all, saturate_all_metered, saturate_metered, sort_by_lead,
    toric_ideal_of_matrix, toric_ideal_of_matrix_metered,
};
pub use scalar::ExactInteger;

/// Arbitrary-precision integer used for all certified kernel computations.
pub type BigInt = num_bigint::BigInt;

/// Exponent matrix over arbitrary-precision integers.
pub type BigIntMatrix = IntMatrix<BigInt>;

/// Exponent matrix over machine integers; arithmetic overflow is reported
/// as [`AlgebraError::Overflow`] instead of wrapping.
pub type SmallIntMatrix = IntMatrix<i64>;
