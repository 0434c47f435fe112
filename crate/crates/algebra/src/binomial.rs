//! Pure-difference binomials `x^a − x^b`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::scalar::ExactInteger;

/// `plus − minus`. Equal terms represent the zero binomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
}

impl Binomial {
    pub fn new(plus: Monomial, minus: Monomial) -> Result<Self, AlgebraError> {
        if plus.nvars() != minus.nvars() {
            return Err(AlgebraError::VariableCountMismatch {
                expected: plus.nvars(),
                found: minus.nvars(),
            });
        }
        Ok(Binomial { plus, minus })
    }

    /// `x^{u⁺} − x^{u⁻}` for an integer vector `u`.
    pub fn from_vector<T: ExactInteger>(u: &[T]) -> Result<Self, AlgebraError> {
        if u.iter().all(|x| x.is_zero()) {
            return Err(AlgebraError::ZeroVector);
        }
        let to_exp = |x: &T| -> Result<u32, AlgebraError> {
            x.abs()
                .to_u32()
                .ok_or_else(|| AlgebraError::ExponentTooLarge(x.to_string()))
        };
        let mut plus = Vec::with_capacity(u.len());
        let mut minus = Vec::with_capacity(u.len());
        for x in u {
            if x.is_positive() {
                plus.push(to_exp(x)?);
                minus.push(0);
            } else {
                plus.push(0);
                minus.push(to_exp(x)?);
            }
        }
        Ok(Binomial {
            plus: Monomial::new(plus),
            minus: Monomial::new(minus),
        })
    }

    pub fn nvars(&self) -> usize {
        self.plus.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.plus == self.minus
    }

    pub fn degree(&self) -> u64 {
        self.plus.degree().max(self.minus.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.plus.degree() == self.minus.degree()
    }

    /// `plus − minus` as an integer exponent vector.
    pub fn exponent_vector(&self) -> Vec<i64> {
        self.plus
            .exponents()
            .iter()
            .zip(self.minus.exponents())
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect()
    }

    /// The same binomial up to sign, written leading term first.
    pub fn oriented(&self, order: &MonomialOrder) -> Binomial {
        match order.cmp(&self.plus, &self.minus) {
            Ordering::Less => Binomial {
                plus: self.minus.clone(),
                minus: self.plus.clone(),
            },
            _ => self.clone(),
        }
    }

    /// `−self`.
    pub fn negated(&self) -> Binomial {
        Binomial {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_split() {
        let b = Binomial::from_vector(&[1i64, -1, 1]).unwrap();
        assert_eq!(b.plus, Monomial::new(vec![1, 0, 1]));
        assert_eq!(b.minus, Monomial::new(vec![0, 1, 0]));
        let c = Binomial::from_vector(&[0i64, 1, -2, 1]).unwrap();
        assert_eq!(c.to_string(), "x1*x3 - x2^2");
        assert_eq!(c.exponent_vector(), vec![0, 1, -2, 1]);
    }

    #[test]
    fn zero_vector_rejected() {
        assert_eq!(
            Binomial::from_vector(&[0i64, 0]).unwrap_err(),
            AlgebraError::ZeroVector
        );
    }

    #[test]
    fn orientation() {
        let o = MonomialOrder::degrevlex(2);
        let b = Binomial::new(Monomial::new(vec![0, 1]), Monomial::new(vec![1, 0])).unwrap();
        let ob = b.oriented(&o);
        assert_eq!(ob.plus, Monomial::new(vec![1, 0]));
        assert_eq!(ob, b.negated().oriented(&o));
    }
}
