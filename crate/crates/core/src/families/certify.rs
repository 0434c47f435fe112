//! Primality verdicts for the linked families.

use std::collections::BTreeSet;

use polyprime_algebra::Budget;

use super::linked::{FamilyKind, FamilySpec};
use crate::classify::{find_l_configurations, find_ladders};
use crate::error::FamilyError;
use crate::grid::{Cell, Polyomino};
use crate::ideals::{toric_map_ladder, toric_map_lconfig, toric_map_marked};
use crate::toric::{certify_with_map, InconclusiveReason, PrimalityVerdict, Proof};

/// Certifies an instance validated by one of the constructors. `P(S, C)`
/// is marked through an L-configuration or ladder inside `C`; good
/// L-rectangles and ladder-rectangles through their rectangle markings.
pub fn certify_family(p: &Polyomino, spec: &FamilySpec, budget: &Budget) -> Result<PrimalityVerdict, FamilyError> {
    let parts: BTreeSet<Cell> = spec.parts.values().flatten().copied().collect();
    if &parts != p.cells() {
        return Err(FamilyError::condition(1, "the polyomino is not the union of the parts"));
    }
    let not_covered = || PrimalityVerdict::Inconclusive {
        reason: InconclusiveReason::NotCovered,
        budget: budget.clone(),
    };
    match spec.kind {
        FamilyKind::Psc => {
            let c: BTreeSet<Cell> = spec.parts.get("C").into_iter().flatten().copied().collect();
            if let Some(l) = find_l_configurations(p)
                .into_iter()
                .find(|l| l.cells.iter().all(|x| c.contains(x)))
            {
                let phi = toric_map_lconfig(p, &l).map_err(crate::error::ToricError::from)?;
                return Ok(certify_with_map(p, &phi, Proof::LConfigToric, budget)?);
            }
            if let Some(ladder) = find_ladders(p, 3)
                .into_iter()
                .find(|l| l.blocks.iter().flat_map(|b| &b.cells).all(|x| c.contains(x)))
            {
                let phi = toric_map_ladder(p, &ladder).map_err(crate::error::ToricError::from)?;
                return Ok(certify_with_map(p, &phi, Proof::LadderToric, budget)?);
            }
            Ok(not_covered())
        }
        FamilyKind::GoodLRectangle | FamilyKind::LadderRectangle => {
            let marked = spec
                .rectangle_marking()
                .ok_or_else(|| FamilyError::condition(0, "missing rectangle pose"))?;
            let phi = toric_map_marked(p, &marked).map_err(crate::error::ToricError::from)?;
            Ok(certify_with_map(p, &phi, Proof::FamilyToric, budget)?)
        }
        FamilyKind::RectangleLinked => Ok(not_covered()),
    }
}
