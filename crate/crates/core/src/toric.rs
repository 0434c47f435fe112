//! The primality pipeline: toric ideals of marked maps, ideal equality
//! with the inner-minor ideal, and verdicts for closed paths and simple
//! polyominoes.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use polyprime_algebra::{
    buchberger_metered, saturate_metered, toric_ideal_of_matrix_metered, AlgebraError, Binomial, Budget,
    BudgetKind, GroebnerBasis, Meter, MonomialOrder,
};

use crate::classify::{closed_path_certificate, find_l_configurations, find_ladders, has_block_of_length};
use crate::error::ToricError;
use crate::grid::{Point, Polyomino};
use crate::ideals::{check_containment, inner_minors, toric_map_ladder, toric_map_lconfig, toric_map_marked, ToricMap};
use crate::zigzag::{find_zigzag_walk, ZigZagWalk};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Proof {
    LConfigToric,
    LadderToric,
    SimpleToric,
    /// A marked set supplied by one of the linked-rectangle families.
    FamilyToric,
}

impl Proof {
    pub fn describe(&self) -> &'static str {
        match self {
            Proof::LConfigToric => "L-configuration",
            Proof::LadderToric => "ladder",
            Proof::SimpleToric => "simple",
            Proof::FamilyToric => "family marking",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Certificate {
    /// Reduced Gröbner bases of `I_P` and `J_P` coincide.
    Full { generators: usize },
    /// Only `I_P ⊆ J_P` was checked; the equality run hit the budget.
    ContainmentOnly { exhausted: BudgetKind },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InconclusiveReason {
    /// No supported marking applies to this shape.
    NotCovered,
    BudgetExhausted(BudgetKind),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum PrimalityVerdict {
    Prime {
        proof: Proof,
        certificate: Certificate,
        marked: Vec<Point>,
    },
    NonPrime {
        witness: ZigZagWalk,
    },
    Inconclusive {
        reason: InconclusiveReason,
        budget: Budget,
    },
}

impl PrimalityVerdict {
    pub fn is_prime(&self) -> bool {
        matches!(self, PrimalityVerdict::Prime { .. })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            PrimalityVerdict::Prime { .. } => "prime",
            PrimalityVerdict::NonPrime { .. } => "non_prime",
            PrimalityVerdict::Inconclusive { .. } => "inconclusive",
        }
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        match self {
            PrimalityVerdict::Prime { proof, certificate, .. } => match certificate {
                Certificate::Full { .. } => format!("Prime ({}; I_P = J_P verified)", proof.describe()),
                Certificate::ContainmentOnly { exhausted } => format!(
                    "Prime ({}; containment only, equality check hit the {} budget)",
                    proof.describe(),
                    budget_name(*exhausted)
                ),
            },
            PrimalityVerdict::NonPrime { witness } => {
                format!("NonPrime (zig-zag walk of {} intervals)", witness.intervals.len())
            }
            PrimalityVerdict::Inconclusive { reason, .. } => match reason {
                InconclusiveReason::NotCovered => "Inconclusive (no supported marking)".to_string(),
                InconclusiveReason::BudgetExhausted(k) => format!("Inconclusive ({} budget exhausted)", budget_name(*k)),
            },
        }
    }
}

fn budget_name(k: BudgetKind) -> &'static str {
    match k {
        BudgetKind::Pairs => "pair",
        BudgetKind::Degree => "degree",
        BudgetKind::WallTime => "time",
    }
}

/// Default order: degrevlex over the vertices in lexicographic order.
pub fn vertex_order(phi: &ToricMap) -> MonomialOrder {
    MonomialOrder::degrevlex(phi.ring().nvars())
}

fn toric_ideal_metered(phi: &ToricMap, meter: &mut Meter) -> Result<GroebnerBasis, ToricError> {
    let gb = toric_ideal_of_matrix_metered(&phi.exponent_matrix(), &vertex_order(phi), meter)?;
    if let Some(g) = gb.generators.iter().find(|g| !phi.evaluate(g).is_zero()) {
        return Err(ToricError::InvariantViolated(format!("{g} is not in the kernel")));
    }
    Ok(gb)
}

/// Reduced Gröbner basis of `ker φ` in [`vertex_order`]. Every generator
/// is evaluated under `φ` before returning.
pub fn toric_ideal(phi: &ToricMap, budget: &Budget) -> Result<GroebnerBasis, ToricError> {
    toric_ideal_metered(phi, &mut budget.start())
}

/// Reduced Gröbner basis of `I_P` in the default vertex order.
pub fn polyomino_ideal(p: &Polyomino, budget: &Budget) -> Result<GroebnerBasis, ToricError> {
    let phi = toric_map_marked(p, &BTreeSet::new())?;
    Ok(buchberger_metered(&inner_minors(p), &vertex_order(&phi), &mut budget.start())?)
}

/// Whether `(J : x_k^∞) = J` for every variable, given a Gröbner basis of `J`.
fn check_saturated(gb: &GroebnerBasis, meter: &mut Meter) -> Result<(), ToricError> {
    for var in 0..gb.order.nvars() {
        let sat = saturate_metered(&gb.generators, var, meter)?;
        if let Some(g) = sat.iter().find(|g| !gb.contains(g)) {
            return Err(ToricError::InvariantViolated(format!(
                "saturating by variable {var} adds {g}"
            )));
        }
    }
    Ok(())
}

fn exhausted_kind(e: &AlgebraError) -> Option<BudgetKind> {
    match e {
        AlgebraError::BudgetExhausted { kind, .. } => Some(*kind),
        _ => None,
    }
}

/// Compares `I_P` and `J_P = ker φ` as reduced Gröbner bases, and checks
/// that `J_P` is saturated. `Ok(Err(kind))` means the budget ran out.
pub fn full_equality(
    p: &Polyomino,
    phi: &ToricMap,
    budget: &Budget,
) -> Result<Result<usize, BudgetKind>, ToricError> {
    let mut meter = budget.start();
    let run = |meter: &mut Meter| -> Result<usize, ToricError> {
        let order = vertex_order(phi);
        let i_p = buchberger_metered(&inner_minors(p), &order, meter)?;
        let j_p = toric_ideal_metered(phi, meter)?;
        if i_p.generators != j_p.generators {
            return Err(ToricError::InvariantViolated(format!(
                "I_P and J_P differ ({} vs {} generators)",
                i_p.len(),
                j_p.len()
            )));
        }
        check_saturated(&j_p, meter)?;
        Ok(j_p.len())
    };
    match run(&mut meter) {
        Ok(n) => Ok(Ok(n)),
        Err(ToricError::Algebra(e)) => match exhausted_kind(&e) {
            Some(kind) => Ok(Err(kind)),
            None => Err(ToricError::Algebra(e)),
        },
        Err(e) => Err(e),
    }
}

/// Certifies primality of `p` through the given marked map: containment
/// must hold, then equality is attempted within `budget`.
pub fn certify_with_map(
    p: &Polyomino,
    phi: &ToricMap,
    proof: Proof,
    budget: &Budget,
) -> Result<PrimalityVerdict, ToricError> {
    if !check_containment(p, phi) {
        return Err(ToricError::InvariantViolated(
            "an inner minor is not in the kernel of the marked map".into(),
        ));
    }
    let certificate = match full_equality(p, phi, budget)? {
        Ok(generators) => Certificate::Full { generators },
        Err(exhausted) => Certificate::ContainmentOnly { exhausted },
    };
    Ok(PrimalityVerdict::Prime {
        proof,
        certificate,
        marked: phi.marked().iter().copied().collect(),
    })
}

/// The marked map used for a closed path without zig-zag walks: the first
/// L-configuration if any, else the first maximal ladder of three or more
/// steps.
pub fn closed_path_map(p: &Polyomino) -> Result<Option<(ToricMap, Proof)>, ToricError> {
    if let Some(l) = find_l_configurations(p).first() {
        return Ok(Some((toric_map_lconfig(p, l)?, Proof::LConfigToric)));
    }
    if let Some(ladder) = find_ladders(p, 3).first() {
        return Ok(Some((toric_map_ladder(p, ladder)?, Proof::LadderToric)));
    }
    Ok(None)
}

/// Primality verdict for a simple polyomino or a closed path.
pub fn certify_primality(p: &Polyomino, budget: &Budget) -> Result<PrimalityVerdict, ToricError> {
    if p.is_simple() {
        let phi = toric_map_marked(p, &BTreeSet::new())?;
        return certify_with_map(p, &phi, Proof::SimpleToric, budget);
    }
    if closed_path_certificate(p).is_none() {
        return Err(ToricError::NotInSupportedClass);
    }
    if !has_block_of_length(p, 3) {
        return Err(ToricError::InvariantViolated("closed path without a block of length 3".into()));
    }
    if let Some(witness) = find_zigzag_walk(p) {
        return Ok(PrimalityVerdict::NonPrime { witness });
    }
    match closed_path_map(p)? {
        Some((phi, proof)) => certify_with_map(p, &phi, proof, budget),
        None => Err(ToricError::InvariantViolated(
            "closed path without zig-zag walks has neither an L-configuration nor a ladder".into(),
        )),
    }
}

/// Membership test against a reduced basis, for callers holding binomials
/// from another route.
pub fn contains_all(gb: &GroebnerBasis, gens: &[Binomial]) -> bool {
    gens.iter().all(|g| gb.contains(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Cell;
    use crate::shapes::frame3;

    #[test]
    fn single_cell_toric_ideal() {
        let p = Polyomino::from_coords(&[(0, 0)]).unwrap();
        let phi = toric_map_marked(&p, &BTreeSet::new()).unwrap();
        let gb = toric_ideal(&phi, &Budget::unlimited()).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb.generators[0].degree(), 2);
    }

    #[test]
    fn square_toric_equals_minors() {
        let p = Polyomino::rectangle(Cell::new(0, 0), 2, 2).unwrap();
        let phi = toric_map_marked(&p, &BTreeSet::new()).unwrap();
        let j = toric_ideal(&phi, &Budget::unlimited()).unwrap();
        let i = polyomino_ideal(&p, &Budget::unlimited()).unwrap();
        assert_eq!(i.generators, j.generators);
    }

    #[test]
    fn frame3_is_prime_with_full_certificate() {
        let v = certify_primality(&frame3(), &Budget::unlimited()).unwrap();
        match v {
            PrimalityVerdict::Prime { proof, certificate, marked } => {
                assert_eq!(proof, Proof::LConfigToric);
                assert!(matches!(certificate, Certificate::Full { .. }));
                assert_eq!(marked.len(), 4);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn tiny_budget_downgrades() {
        let budget = Budget {
            max_pairs: Some(3),
            ..Budget::default()
        };
        let v = certify_primality(&frame3(), &budget).unwrap();
        assert!(matches!(
            v,
            PrimalityVerdict::Prime {
                certificate: Certificate::ContainmentOnly {
                    exhausted: BudgetKind::Pairs
                },
                ..
            }
        ));
    }

    #[test]
    fn unsupported_class() {
        // Two disjoint-hole shape: a 5x3 block with two holes.
        let mut cells = Vec::new();
        for x in 0..5 {
            for y in 0..3 {
                if !(y == 1 && (x == 1 || x == 3)) {
                    cells.push((x, y));
                }
            }
        }
        let p = Polyomino::from_coords(&cells).unwrap();
        assert_eq!(
            certify_primality(&p, &Budget::unlimited()).unwrap_err(),
            ToricError::NotInSupportedClass
        );
    }

    #[test]
    fn summary_text() {
        let v = certify_primality(&frame3(), &Budget::unlimited()).unwrap();
        assert_eq!(v.summary(), "Prime (L-configuration; I_P = J_P verified)");
    }
}
