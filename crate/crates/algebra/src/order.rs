//! Monomial orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderKind {
    /// Graded reverse lexicographic.
    DegRevLex,
    Lex,
    /// Block order: the first `block` variables (in ranking order) are
    /// compared by degrevlex first, ties broken by degrevlex on the rest.
    /// Any monomial containing a block variable beats every monomial free
    /// of them, which makes it an elimination order for the block.
    Elimination { block: usize },
}

/// A monomial order together with a variable ranking.
///
/// `ranking[0]` is the most significant variable, `ranking[n-1]` the least.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialOrder {
    kind: OrderKind,
    ranking: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, ranking: Vec<usize>) -> Result<Self, AlgebraError> {
        let n = ranking.len();
        let mut seen = vec![false; n];
        for &v in &ranking {
            if v >= n || seen[v] {
                return Err(AlgebraError::VariableOutOfRange { index: v, nvars: n });
            }
            seen[v] = true;
        }
        if let OrderKind::Elimination { block } = kind {
            if block > n {
                return Err(AlgebraError::VariableOutOfRange { index: block, nvars: n });
            }
        }
        Ok(MonomialOrder { kind, ranking })
    }

    /// Degrevlex with `x0 > x1 > … > x(n-1)`.
    pub fn degrevlex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            ranking: (0..nvars).collect(),
        }
    }

    pub fn lex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            ranking: (0..nvars).collect(),
        }
    }

    /// Same kind, with `var` moved to the least significant position.
    pub fn with_cheapest(&self, var: usize) -> Self {
        let mut ranking: Vec<usize> = self.ranking.iter().copied().filter(|&v| v != var).collect();
        ranking.push(var);
        MonomialOrder {
            kind: self.kind,
            ranking,
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn nvars(&self) -> usize {
        self.ranking.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.kind
            .cmp_ranked(&a.permuted(&self.ranking), &b.permuted(&self.ranking))
    }
}

impl OrderKind {
    /// Compares exponent vectors already laid out in ranking order.
    pub(crate) fn cmp_ranked(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            OrderKind::DegRevLex => {
                a.degree().cmp(&b.degree()).then_with(|| revlex(a.exponents(), b.exponents()))
            }
            OrderKind::Lex => a.exponents().cmp(b.exponents()),
            OrderKind::Elimination { block } => {
                let (a1, a2) = a.exponents().split_at(block);
                let (b1, b2) = b.exponents().split_at(block);
                let da1: u64 = a1.iter().map(|&e| e as u64).sum();
                let db1: u64 = b1.iter().map(|&e| e as u64).sum();
                da1.cmp(&db1)
                    .then_with(|| revlex(a1, b1))
                    .then_with(|| (a.degree() - da1).cmp(&(b.degree() - db1)))
                    .then_with(|| revlex(a2, b2))
            }
        }
    }
}

/// Reverse lexicographic tie-break: the last differing exponent decides,
/// and the smaller exponent there means the larger monomial.
fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_basics() {
        let o = MonomialOrder::degrevlex(3);
        // Higher degree wins.
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
        // x0*x2 < x1^2 in degrevlex (last variable exponent larger on the left).
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[1, 1, 0])), Ordering::Equal);
    }

    #[test]
    fn lex_basics() {
        let o = MonomialOrder::lex(3);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        let o = MonomialOrder::new(OrderKind::Elimination { block: 1 }, vec![0, 1, 2]).unwrap();
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 4, 4])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn cheapest_variable_goes_last() {
        let o = MonomialOrder::degrevlex(4).with_cheapest(1);
        assert_eq!(o.ranking(), &[0, 2, 3, 1]);
        // Among equal degree, anything containing x1 is smaller.
        assert_eq!(o.cmp(&m(&[0, 1, 0, 0]), &m(&[0, 0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn invalid_ranking_rejected() {
        assert!(MonomialOrder::new(OrderKind::Lex, vec![0, 0]).is_err());
        assert!(MonomialOrder::new(OrderKind::Lex, vec![0, 2]).is_err());
    }
}
