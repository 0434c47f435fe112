//! Dense monomials `x^a` over a fixed number of variables.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

/// Exponent vector with cached total degree and a support bitmask for fast
/// divisibility rejection (bit `i mod 64` is set when variable `i` occurs).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u64,
    mask: u64,
}

impl From<Vec<u32>> for Monomial {
    fn from(exps: Vec<u32>) -> Self {
        Monomial::new(exps)
    }
}

impl From<Monomial> for Vec<u32> {
    fn from(m: Monomial) -> Self {
        m.exps.into_vec()
    }
}

impl Monomial {
    pub fn new(exps: impl Into<Box<[u32]>>) -> Self {
        let exps = exps.into();
        let degree = exps.iter().map(|&e| e as u64).sum();
        let mask = support_mask(&exps);
        Monomial { exps, degree, mask }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    pub fn var(index: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial::new(e)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        if self.mask & other.mask == 0 {
            return true;
        }
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial, AlgebraError> {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).ok_or(AlgebraError::Overflow))
            .collect::<Result<_, _>>()?;
        Ok(Monomial::new(exps))
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a - b)
                .collect::<Vec<_>>(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect::<Vec<_>>(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.min(b))
                .collect::<Vec<_>>(),
        )
    }

    /// Reorders variables: variable `perm[k]` of `self` becomes variable `k`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        Monomial::new(perm.iter().map(|&i| self.exps[i]).collect::<Vec<_>>())
    }

    /// Inverse of [`Monomial::permuted`].
    pub fn unpermuted(&self, perm: &[usize]) -> Monomial {
        let mut e = vec![0; self.exps.len()];
        for (k, &i) in perm.iter().enumerate() {
            e[i] = self.exps[k];
        }
        Monomial::new(e)
    }

    /// Same exponents followed by `extra` zero exponents.
    pub fn extended(&self, extra: usize) -> Monomial {
        let mut e = self.exps.to_vec();
        e.extend(std::iter::repeat(0).take(extra));
        Monomial::new(e)
    }

    /// Drops the trailing `count` variables; `None` if any of them occurs.
    pub fn truncated(&self, count: usize) -> Option<Monomial> {
        let keep = self.exps.len() - count;
        if self.exps[keep..].iter().any(|&e| e != 0) {
            return None;
        }
        Some(Monomial::new(self.exps[..keep].to_vec()))
    }
}

fn support_mask(exps: &[u32]) -> u64 {
    exps.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Renders as `x0^2*x3`, or `1` for the unit monomial.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_quotient() {
        let a = Monomial::new(vec![1, 0, 2]);
        let b = Monomial::new(vec![2, 1, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.div(&a).unwrap(), Monomial::new(vec![1, 1, 0]));
        assert!(a.div(&b).is_none());
    }

    #[test]
    fn mask_aliasing_beyond_64_vars_is_still_exact() {
        let mut e1 = vec![0; 70];
        let mut e2 = vec![0; 70];
        e1[66] = 1;
        e2[2] = 1;
        let a = Monomial::new(e1);
        let b = Monomial::new(e2);
        assert!(!a.divides(&b));
        assert!(a.is_coprime(&b));
    }

    #[test]
    fn lcm_gcd() {
        let a = Monomial::new(vec![1, 3, 0]);
        let b = Monomial::new(vec![2, 1, 0]);
        assert_eq!(a.lcm(&b), Monomial::new(vec![2, 3, 0]));
        assert_eq!(a.gcd(&b), Monomial::new(vec![1, 1, 0]));
        assert_eq!(a.lcm(&b).degree(), 5);
    }

    #[test]
    fn permutation_roundtrip() {
        let a = Monomial::new(vec![4, 5, 6]);
        let perm = [2, 0, 1];
        assert_eq!(a.permuted(&perm), Monomial::new(vec![6, 4, 5]));
        assert_eq!(a.permuted(&perm).unpermuted(&perm), a);
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::new(vec![2, 0, 1]).to_string(), "x0^2*x2");
        assert_eq!(Monomial::one(3).to_string(), "1");
    }
}
