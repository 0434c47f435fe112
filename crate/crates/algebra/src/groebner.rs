//! Buchberger's algorithm specialised to pure-difference binomials.
//!
//! For `f = x^a − x^b` and `g = x^c − x^d` the S-polynomial is again a
//! difference of two monomials, and so is every reduction step, so the
//! whole computation is exponent bookkeeping: no coefficient ever leaves
//! `{+1, −1}` and a binomial vanishes exactly when its two terms coincide.
//!
//! Pairs are pruned with the Gebauer–Möller update and selected by the
//! normal strategy (smallest lcm degree, then smallest lcm, then index),
//! which makes the output deterministic.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::binomial::Binomial;
use crate::error::{AlgebraError, BudgetKind};
use crate::monomial::Monomial;
use crate::order::{MonomialOrder, OrderKind};

/// Resource limits for a Gröbner computation. `None` means unlimited.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    pub max_pairs: Option<usize>,
    pub max_degree: Option<u64>,
    pub max_seconds: Option<f64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn with_seconds(seconds: f64) -> Self {
        Budget {
            max_seconds: Some(seconds),
            ..Budget::default()
        }
    }

    /// Starts the wall clock; the returned meter is shared by every
    /// Gröbner run of one logical computation.
    pub fn start(&self) -> Meter {
        Meter {
            budget: self.clone(),
            deadline: self
                .max_seconds
                .map(|s| Instant::now() + Duration::from_secs_f64(s.max(0.0))),
            pairs: 0,
        }
    }
}

/// A running budget: the deadline is fixed at [`Budget::start`] and the
/// S-pair count accumulates across calls.
#[derive(Debug, Clone)]
pub struct Meter {
    budget: Budget,
    deadline: Option<Instant>,
    pairs: usize,
}

impl Meter {
    pub fn pairs(&self) -> usize {
        self.pairs
    }

    fn charge_pair(&mut self, lcm_degree: u64, basis_len: usize) -> Result<(), AlgebraError> {
        self.pairs += 1;
        let fail = |kind| AlgebraError::BudgetExhausted {
            kind,
            pairs: self.pairs,
            basis_len,
        };
        if self.budget.max_pairs.is_some_and(|m| self.pairs > m) {
            return Err(fail(BudgetKind::Pairs));
        }
        if self.budget.max_degree.is_some_and(|d| lcm_degree > d) {
            return Err(fail(BudgetKind::Degree));
        }
        if self.pairs % 64 == 0 && self.deadline.is_some_and(|t| Instant::now() > t) {
            return Err(fail(BudgetKind::WallTime));
        }
        Ok(())
    }

    fn check_clock(&self, basis_len: usize) -> Result<(), AlgebraError> {
        if self.deadline.is_some_and(|t| Instant::now() > t) {
            return Err(AlgebraError::BudgetExhausted {
                kind: BudgetKind::WallTime,
                pairs: self.pairs,
                basis_len,
            });
        }
        Ok(())
    }
}

/// A Gröbner basis of binomials. Every generator is stored leading term
/// first (`plus` is the leading monomial), which also fixes its sign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerBasis {
    pub generators: Vec<Binomial>,
    pub order: MonomialOrder,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.generators.iter().map(|g| &g.plus)
    }

    /// Normal form of a monomial modulo the ideal.
    pub fn normal_form(&self, m: &Monomial) -> Monomial {
        normal_form(&self.generators, m)
    }

    /// Ideal membership for a binomial.
    pub fn contains(&self, b: &Binomial) -> bool {
        self.normal_form(&b.plus) == self.normal_form(&b.minus)
    }
}

/// Rewrites `m` with `lead → trail` rules until no leading monomial
/// divides it. The rules are the generators read as `plus → minus`, so the
/// caller must pass them oriented.
pub fn normal_form(rules: &[Binomial], m: &Monomial) -> Monomial {
    let mut cur = m.clone();
    'outer: loop {
        for g in rules {
            if let Some(q) = cur.div(&g.plus) {
                cur = q.mul(&g.minus).expect("exponent overflow in normal form");
                continue 'outer;
            }
        }
        return cur;
    }
}

#[derive(Debug, Clone)]
struct Poly {
    lead: Monomial,
    trail: Monomial,
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine {
    kind: OrderKind,
    polys: Vec<Poly>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.kind.cmp_ranked(a, b)
    }

    fn reduce_monomial(&self, m: &Monomial) -> Result<Monomial, AlgebraError> {
        let mut cur = m.clone();
        'outer: loop {
            for &k in &self.active {
                let p = &self.polys[k];
                if let Some(q) = cur.div(&p.lead) {
                    cur = q.mul(&p.trail)?;
                    continue 'outer;
                }
            }
            return Ok(cur);
        }
    }

    /// Normal form of `a − b`, oriented; `None` if it reduces to zero.
    fn reduce_pair_of_terms(&self, a: &Monomial, b: &Monomial) -> Result<Option<Poly>, AlgebraError> {
        if a == b {
            return Ok(None);
        }
        let a = self.reduce_monomial(a)?;
        let b = self.reduce_monomial(b)?;
        Ok(match self.cmp(&a, &b) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Poly { lead: a, trail: b }),
            Ordering::Less => Some(Poly { lead: b, trail: a }),
        })
    }

    fn insert(&mut self, p: Poly) {
        let h = self.polys.len();
        self.polys.push(p);
        self.update(h);
    }

    /// Gebauer–Möller pair update after adding `polys[h]`.
    fn update(&mut self, h: usize) {
        let lh = self.polys[h].lead.clone();
        let candidates: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| Pair {
                i: g,
                j: h,
                lcm: lh.lcm(&self.polys[g].lead),
            })
            .collect();

        let mut kept: Vec<(Pair, bool)> = Vec::new();
        for (idx, p) in candidates.iter().enumerate() {
            let coprime = lh.is_coprime(&self.polys[p.i].lead);
            let dominated = || {
                candidates[idx + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
                    || kept.iter().any(|(q, _)| q.lcm.divides(&p.lcm))
            };
            if coprime || !dominated() {
                kept.push((p.clone(), coprime));
            }
        }

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !lh.divides(&p.lcm)
                || lh.lcm(&polys[p.i].lead) == p.lcm
                || lh.lcm(&polys[p.j].lead) == p.lcm
        });
        self.pairs
            .extend(kept.into_iter().filter(|(_, coprime)| !coprime).map(|(p, _)| p));

        self.active.retain(|&g| !lh.divides(&polys[g].lead));
        self.active.push(h);
    }

    fn select_pair(&mut self) -> Option<Pair> {
        let kind = self.kind;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| kind.cmp_ranked(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn run(&mut self, meter: &mut Meter) -> Result<(), AlgebraError> {
        while let Some(pair) = self.select_pair() {
            meter.charge_pair(pair.lcm.degree(), self.active.len())?;
            let pi = &self.polys[pair.i];
            let pj = &self.polys[pair.j];
            let a = pair.lcm.div(&pi.lead).expect("lcm divisible").mul(&pi.trail)?;
            let b = pair.lcm.div(&pj.lead).expect("lcm divisible").mul(&pj.trail)?;
            if let Some(p) = self.reduce_pair_of_terms(&a, &b)? {
                self.insert(p);
            }
        }
        Ok(())
    }

    /// Minimal basis with fully reduced trails, sorted by decreasing lead.
    fn reduced_basis(&self) -> Result<Vec<Poly>, AlgebraError> {
        let mut minimal: Vec<Poly> = Vec::new();
        for &k in &self.active {
            let p = &self.polys[k];
            let redundant = self
                .active
                .iter()
                .any(|&o| o != k && self.polys[o].lead.divides(&p.lead));
            if !redundant {
                minimal.push(p.clone());
            }
        }
        let rules: Vec<Binomial> = minimal
            .iter()
            .map(|p| Binomial {
                plus: p.lead.clone(),
                minus: p.trail.clone(),
            })
            .collect();
        let mut out: Vec<Poly> = minimal
            .iter()
            .map(|p| Poly {
                lead: p.lead.clone(),
                trail: normal_form(&rules, &p.trail),
            })
            .collect();
        out.sort_by(|a, b| self.cmp(&b.lead, &a.lead));
        Ok(out)
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// All intermediate polynomials are binomials. Zero generators are
/// ignored; the basis of the zero ideal is empty.
pub fn buchberger(
    gens: &[Binomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis, AlgebraError> {
    let mut meter = budget.start();
    buchberger_metered(gens, order, &mut meter)
}

/// [`buchberger`] charging an already running [`Meter`].
pub fn buchberger_metered(
    gens: &[Binomial],
    order: &MonomialOrder,
    meter: &mut Meter,
) -> Result<GroebnerBasis, AlgebraError> {
    let n = order.nvars();
    for g in gens {
        if g.nvars() != n {
            return Err(AlgebraError::VariableCountMismatch {
                expected: n,
                found: g.nvars(),
            });
        }
    }
    let ranking = order.ranking();
    let mut engine = Engine {
        kind: order.kind(),
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    // Insert generators smallest first so that early reductions are cheap
    // and the insertion order does not depend on caller order.
    let mut ranked: Vec<(Monomial, Monomial)> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (g.plus.permuted(ranking), g.minus.permuted(ranking)))
        .map(|(a, b)| match order.kind().cmp_ranked(&a, &b) {
            Ordering::Less => (b, a),
            _ => (a, b),
        })
        .collect();
    ranked.sort_by(|x, y| {
        order
            .kind()
            .cmp_ranked(&x.0, &y.0)
            .then_with(|| order.kind().cmp_ranked(&x.1, &y.1))
    });
    ranked.dedup();
    for (a, b) in ranked {
        meter.check_clock(engine.active.len())?;
        if let Some(p) = engine.reduce_pair_of_terms(&a, &b)? {
            engine.insert(p);
        }
    }
    engine.run(meter)?;
    let generators = engine
        .reduced_basis()?
        .into_iter()
        .map(|p| Binomial {
            plus: p.lead.unpermuted(ranking),
            minus: p.trail.unpermuted(ranking),
        })
        .collect();
    Ok(GroebnerBasis {
        generators,
        order: order.clone(),
        reduced: true,
    })
}

/// Equality of two binomial ideals, decided by comparing reduced Gröbner
/// bases under one fixed order.
pub fn ideal_equal(
    a: &[Binomial],
    b: &[Binomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<bool, AlgebraError> {
    let mut meter = budget.start();
    let ga = buchberger_metered(a, order, &mut meter)?;
    let gb = buchberger_metered(b, order, &mut meter)?;
    Ok(ga.generators == gb.generators)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin(p: &[u32], m: &[u32]) -> Binomial {
        Binomial::new(Monomial::new(p.to_vec()), Monomial::new(m.to_vec())).unwrap()
    }

    #[test]
    fn single_two_minor_is_its_own_basis() {
        // x1*x4 - x2*x3 over (x1, x2, x3, x4).
        let f = bin(&[1, 0, 0, 1], &[0, 1, 1, 0]);
        let gb = buchberger(&[f.clone()], &MonomialOrder::degrevlex(4), &Budget::unlimited())
            .unwrap();
        assert_eq!(gb.generators.len(), 1);
        assert_eq!(gb.generators[0], f.oriented(&MonomialOrder::degrevlex(4)));
    }

    #[test]
    fn twisted_cubic_from_three_quadrics() {
        // a,b,c,d = x0..x3; generators ad-bc, b^2-ac, c^2-bd.
        let o = MonomialOrder::degrevlex(4);
        let gens = vec![
            bin(&[1, 0, 0, 1], &[0, 1, 1, 0]),
            bin(&[0, 2, 0, 0], &[1, 0, 1, 0]),
            bin(&[0, 0, 2, 0], &[0, 1, 0, 1]),
        ];
        let gb = buchberger(&gens, &o, &Budget::unlimited()).unwrap();
        let mut expected: Vec<Binomial> = gens.iter().map(|g| g.oriented(&o)).collect();
        expected.sort_by(|x, y| o.cmp(&y.plus, &x.plus));
        assert_eq!(gb.generators, expected);
    }

    #[test]
    fn sign_normalisation_makes_opposites_equal() {
        let o = MonomialOrder::degrevlex(2);
        let f = bin(&[1, 0], &[0, 1]);
        assert!(ideal_equal(&[f.clone()], &[f.negated()], &o, &Budget::unlimited()).unwrap());
    }

    #[test]
    fn reduction_detects_non_membership() {
        let o = MonomialOrder::degrevlex(3);
        let gb = buchberger(&[bin(&[1, 0, 0], &[0, 1, 0])], &o, &Budget::unlimited()).unwrap();
        assert!(gb.contains(&bin(&[2, 0, 0], &[0, 2, 0])));
        assert!(!gb.contains(&bin(&[1, 0, 0], &[0, 0, 1])));
    }

    #[test]
    fn pair_budget_is_enforced() {
        let o = MonomialOrder::degrevlex(4);
        let gens = vec![
            bin(&[1, 0, 0, 1], &[0, 1, 1, 0]),
            bin(&[0, 2, 0, 0], &[1, 0, 1, 0]),
        ];
        let budget = Budget {
            max_pairs: Some(0),
            ..Budget::default()
        };
        match buchberger(&gens, &o, &budget) {
            Err(AlgebraError::BudgetExhausted { kind, .. }) => assert_eq!(kind, BudgetKind::Pairs),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn deterministic_across_input_order() {
        let o = MonomialOrder::degrevlex(4);
        let mut gens = vec![
            bin(&[1, 0, 0, 1], &[0, 1, 1, 0]),
            bin(&[0, 2, 0, 0], &[1, 0, 1, 0]),
            bin(&[0, 0, 2, 0], &[0, 1, 0, 1]),
        ];
        let a = buchberger(&gens, &o, &Budget::unlimited()).unwrap();
        gens.reverse();
        let b = buchberger(&gens, &o, &Budget::unlimited()).unwrap();
        assert_eq!(a, b);
    }
}
