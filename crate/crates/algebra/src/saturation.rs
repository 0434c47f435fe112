//! Lattice ideals, saturation by variables, and toric ideals of integer
//! matrices.
//!
//! The toric ideal of `A` is the lattice ideal of `ker A`, obtained from
//! the binomials of a lattice basis by saturating with every variable in
//! turn.

use std::cmp::Ordering;

use crate::binomial::Binomial;
use crate::error::AlgebraError;
use crate::groebner::{buchberger_metered, Budget, GroebnerBasis, Meter};
use crate::matrix::{integer_kernel, IntMatrix};
use crate::monomial::Monomial;
use crate::order::{MonomialOrder, OrderKind};
use crate::scalar::ExactInteger;

/// Binomials `x^{u+} − x^{u−}` for each lattice basis vector `u`.
pub fn lattice_basis_ideal<T: ExactInteger>(basis: &[Vec<T>]) -> Result<Vec<Binomial>, AlgebraError> {
    basis.iter().map(|u| Binomial::from_vector(u)).collect()
}

/// Generators of `I : x_var^∞`.
///
/// Homogeneous input uses the reverse-lex trick: in degrevlex with `x_var`
/// last, dividing each Gröbner basis element by the largest power of
/// `x_var` dividing both terms yields a Gröbner basis of the saturation.
/// Otherwise the saturation is `(I + (t·x_var − 1)) ∩ k[x]`, computed with
/// an elimination order.
pub fn saturate(
    gens: &[Binomial],
    var: usize,
    budget: &Budget,
) -> Result<Vec<Binomial>, AlgebraError> {
    let mut meter = budget.start();
    saturate_metered(gens, var, &mut meter)
}

/// [`saturate`] charging an already running [`Meter`].
pub fn saturate_metered(
    gens: &[Binomial],
    var: usize,
    meter: &mut Meter,
) -> Result<Vec<Binomial>, AlgebraError> {
    let Some(n) = gens.first().map(Binomial::nvars) else {
        return Ok(Vec::new());
    };
    if var >= n {
        return Err(AlgebraError::VariableOutOfRange { index: var, nvars: n });
    }
    if gens.iter().all(Binomial::is_homogeneous) {
        let order = MonomialOrder::degrevlex(n).with_cheapest(var);
        let gb = buchberger_metered(gens, &order, meter)?;
        return Ok(gb.generators.iter().map(|g| strip_var(g, var)).collect());
    }

    let t = n;
    let mut extended: Vec<Binomial> = gens
        .iter()
        .map(|g| Binomial {
            plus: g.plus.extended(1),
            minus: g.minus.extended(1),
        })
        .collect();
    let mut tx = vec![0u32; n + 1];
    tx[t] = 1;
    tx[var] = 1;
    extended.push(Binomial {
        plus: Monomial::new(tx),
        minus: Monomial::one(n + 1),
    });
    let mut ranking = vec![t];
    ranking.extend(0..n);
    let order = MonomialOrder::new(OrderKind::Elimination { block: 1 }, ranking)?;
    let gb = buchberger_metered(&extended, &order, meter)?;
    Ok(gb
        .generators
        .iter()
        .filter_map(|g| {
            Some(Binomial {
                plus: g.plus.truncated(1)?,
                minus: g.minus.truncated(1)?,
            })
        })
        .collect())
}

fn strip_var(g: &Binomial, var: usize) -> Binomial {
    let k = g.plus.exponent(var).min(g.minus.exponent(var));
    if k == 0 {
        return g.clone();
    }
    let mut e = vec![0u32; g.nvars()];
    e[var] = k;
    let xk = Monomial::new(e);
    Binomial {
        plus: g.plus.div(&xk).expect("divisible"),
        minus: g.minus.div(&xk).expect("divisible"),
    }
}

/// `I : (x_0 ⋯ x_{n−1})^∞` as a reduced Gröbner basis in `order`.
pub fn saturate_all(
    gens: &[Binomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis, AlgebraError> {
    let mut meter = budget.start();
    saturate_all_metered(gens, order, &mut meter)
}

/// [`saturate_all`] charging an already running [`Meter`].
pub fn saturate_all_metered(
    gens: &[Binomial],
    order: &MonomialOrder,
    meter: &mut Meter,
) -> Result<GroebnerBasis, AlgebraError> {
    let mut current: Vec<Binomial> = gens.to_vec();
    for var in 0..order.nvars() {
        if current.is_empty() {
            break;
        }
        current = saturate_metered(&current, var, meter)?;
    }
    buchberger_metered(&current, order, meter)
}

/// Reduced Gröbner basis, in `order`, of the toric ideal of `a`: the
/// kernel of `x_j ↦ t^{a_j}` where `a_j` is column `j`.
///
/// Every returned generator is checked to lie in `ker a` before returning.
pub fn toric_ideal_of_matrix<T: ExactInteger>(
    a: &IntMatrix<T>,
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis, AlgebraError> {
    if order.nvars() != a.cols() {
        return Err(AlgebraError::VariableCountMismatch {
            expected: a.cols(),
            found: order.nvars(),
        });
    }
    let mut meter = budget.start();
    toric_ideal_of_matrix_metered(a, order, &mut meter)
}

/// [`toric_ideal_of_matrix`] charging an already running [`Meter`].
pub fn toric_ideal_of_matrix_metered<T: ExactInteger>(
    a: &IntMatrix<T>,
    order: &MonomialOrder,
    meter: &mut Meter,
) -> Result<GroebnerBasis, AlgebraError> {
    if order.nvars() != a.cols() {
        return Err(AlgebraError::VariableCountMismatch {
            expected: a.cols(),
            found: order.nvars(),
        });
    }
    let kernel = integer_kernel(a)?;
    let gens = lattice_basis_ideal(&kernel)?;
    let gb = saturate_all_metered(&gens, order, meter)?;
    for g in &gb.generators {
        let u: Vec<T> = g
            .exponent_vector()
            .into_iter()
            .map(T::from_i64_exact)
            .collect();
        if a.mul_vec(&u)?.iter().any(|v| !v.is_zero()) {
            return Err(AlgebraError::KernelViolation(g.to_string()));
        }
    }
    Ok(gb)
}

/// Sorts binomials by decreasing leading term; useful for comparing
/// generator lists produced by different routes.
pub fn sort_by_lead(gens: &mut [Binomial], order: &MonomialOrder) {
    gens.sort_by(|a, b| match order.cmp(&b.plus, &a.plus) {
        Ordering::Equal => order.cmp(&b.minus, &a.minus),
        o => o,
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn bin(p: &[u32], m: &[u32]) -> Binomial {
        Binomial::new(Monomial::new(p.to_vec()), Monomial::new(m.to_vec())).unwrap()
    }

    #[test]
    fn saturation_removes_variable_factor() {
        // (x*z - x*y) : x^∞ = (z - y)
        let g = bin(&[1, 0, 1], &[1, 1, 0]);
        let sat = saturate(&[g], 0, &Budget::unlimited()).unwrap();
        assert_eq!(sat.len(), 1);
        assert_eq!(sat[0].plus.exponent(0), 0);
        assert_eq!(sat[0].minus.exponent(0), 0);
        assert_eq!(sat[0].degree(), 1);
    }

    #[test]
    fn inhomogeneous_saturation_uses_elimination() {
        // (x^2 - x) : x^∞ = (x - 1)
        let g = bin(&[2], &[1]);
        let sat = saturate(&[g], 0, &Budget::unlimited()).unwrap();
        assert_eq!(sat, vec![bin(&[1], &[0])]);
    }

    #[test]
    fn twisted_cubic_toric_ideal() {
        let a = IntMatrix::<BigInt>::from_i64_rows(&[vec![3, 2, 1, 0], vec![0, 1, 2, 3]]).unwrap();
        let o = MonomialOrder::degrevlex(4);
        let gb = toric_ideal_of_matrix(&a, &o, &Budget::unlimited()).unwrap();
        let mut expected = vec![
            bin(&[1, 0, 0, 1], &[0, 1, 1, 0]).oriented(&o),
            bin(&[0, 2, 0, 0], &[1, 0, 1, 0]).oriented(&o),
            bin(&[0, 0, 2, 0], &[0, 1, 0, 1]).oriented(&o),
        ];
        sort_by_lead(&mut expected, &o);
        assert_eq!(gb.generators, expected);
    }

    #[test]
    fn lattice_ideal_needs_saturation() {
        // Path graph incidence: ker spanned by (1,-1,1,-1)-type vectors give
        // a lattice basis ideal that is not saturated for the 2x2 grid of
        // variables a b / c d with A = row and column sums.
        let a = IntMatrix::<i64>::from_i64_rows(&[
            vec![1, 1, 0, 0, 0, 0],
            vec![0, 0, 1, 1, 0, 0],
            vec![0, 0, 0, 0, 1, 1],
            vec![1, 0, 1, 0, 1, 0],
            vec![0, 1, 0, 1, 0, 1],
        ])
        .unwrap();
        let o = MonomialOrder::degrevlex(6);
        let gb = toric_ideal_of_matrix(&a, &o, &Budget::unlimited()).unwrap();
        // 2x2 minors of a 3x2 matrix: three quadrics.
        assert_eq!(gb.generators.len(), 3);
        assert!(gb.generators.iter().all(|g| g.degree() == 2));
    }
}
