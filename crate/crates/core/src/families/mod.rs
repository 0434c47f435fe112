//! Closed-path enumeration, canonical forms, the linked-rectangle
//! constructors and the verification harness.

mod certify;
mod harness;
mod linked;

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::grid::{Cell, Polyomino};
use crate::symmetry::Symmetry;

pub use certify::certify_family;
pub use harness::{
    cache_key, run_harness, verify_main_theorem, Counterexample, Features, HarnessOptions, Report, ShapeRecord,
    Summary, ENGINE_VERSION,
};
pub use linked::{
    build_psc, build_rectangle_linked, check_good_l_rectangle, FamilyKind, FamilySpec, Pose, PscParts,
    RectangleParts,
};

/// The cells of a polyomino translated to start at `(0, 0)`, taken as the
/// lexicographically least of its eight dihedral images.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub cells: Vec<Cell>,
}

impl CanonicalForm {
    pub fn polyomino(&self) -> Polyomino {
        Polyomino::new(self.cells.iter().copied()).expect("canonical form of a polyomino")
    }

    pub fn rank(&self) -> usize {
        self.cells.len()
    }
}

pub fn canonical_form(p: &Polyomino) -> CanonicalForm {
    Symmetry::ALL
        .iter()
        .map(|&s| CanonicalForm {
            cells: p.transform(s).normalized().cells().iter().copied().collect(),
        })
        .min()
        .expect("eight images")
}

const ORIGIN: Cell = Cell::new(0, 0);
const CLOSING: Cell = Cell::new(0, 1);

fn touches(a: &Cell, b: &Cell) -> bool {
    (a.x - b.x).abs() <= 1 && (a.y - b.y).abs() <= 1
}

/// Depth-first search over cell cycles `A_1 = (0,0), A_2 = (1,0), …,
/// A_n = (0,1)` with `A_1` the least cell. Each closed path has exactly one
/// such cycle per translation class.
struct CycleSearch {
    path: Vec<Cell>,
    on_path: HashSet<Cell>,
    found: Vec<Vec<Cell>>,
}

impl CycleSearch {
    fn new(path: Vec<Cell>) -> Self {
        let on_path = path.iter().copied().collect();
        CycleSearch {
            path,
            on_path,
            found: Vec::new(),
        }
    }

    /// Candidate next cells with the tightened rank limit each one implies.
    fn candidates(&self, limit: usize) -> Vec<(Cell, Option<usize>)> {
        let j = self.path.len() + 1;
        let last = *self.path.last().expect("nonempty path");
        let mut out = Vec::new();
        for c in last.neighbors() {
            if c == CLOSING {
                let clear = (3..=j.saturating_sub(3)).all(|i| !touches(&c, &self.path[i - 1]));
                if j >= 6 && j <= limit && clear {
                    out.push((c, None));
                }
                continue;
            }
            if j + 1 > limit || self.on_path.contains(&c) || c.x < 0 || (c.x == 0 && c.y < 0) {
                continue;
            }
            if (2..=j.saturating_sub(3)).any(|i| touches(&c, &self.path[i - 1])) {
                continue;
            }
            let mut lim = limit;
            if j >= 4 && touches(&c, &ORIGIN) {
                lim = lim.min(j + 1);
            }
            if touches(&c, &CLOSING) {
                lim = lim.min(j + 2);
            }
            let dist = (c.x.abs() + (c.y - 1).abs()) as usize;
            if j + dist > lim {
                continue;
            }
            out.push((c, Some(lim)));
        }
        out
    }

    fn run(&mut self, limit: usize) {
        for (c, next) in self.candidates(limit) {
            self.path.push(c);
            match next {
                None => self.found.push(self.path.clone()),
                Some(lim) => {
                    self.on_path.insert(c);
                    self.run(lim);
                    self.on_path.remove(&c);
                }
            }
            self.path.pop();
        }
    }
}

/// Search states after placing `A_3` and `A_4`, for parallel workers.
fn prefixes(max_rank: usize) -> Vec<(Vec<Cell>, usize)> {
    let mut out = Vec::new();
    let root = CycleSearch::new(vec![ORIGIN, Cell::new(1, 0)]);
    for (c3, l3) in root.candidates(max_rank) {
        let Some(l3) = l3 else { continue };
        let s3 = CycleSearch::new(vec![ORIGIN, Cell::new(1, 0), c3]);
        for (c4, l4) in s3.candidates(l3) {
            if let Some(l4) = l4 {
                out.push((vec![ORIGIN, Cell::new(1, 0), c3, c4], l4));
            }
        }
    }
    out
}

/// Every closed path with at most `max_rank` cells, once per
/// translation/rotation/reflection class, as canonical forms sorted by
/// rank and then lexicographically. Uses the current rayon pool.
pub fn enumerate_closed_paths(max_rank: usize) -> Vec<CanonicalForm> {
    let cycles: Vec<Vec<Cell>> = prefixes(max_rank)
        .into_par_iter()
        .flat_map_iter(|(path, lim)| {
            let mut s = CycleSearch::new(path);
            s.run(lim);
            s.found
        })
        .collect();
    let mut by_form: BTreeMap<(usize, CanonicalForm), ()> = BTreeMap::new();
    for cyc in cycles {
        let p = Polyomino::new(cyc).expect("cycle is connected");
        let f = canonical_form(&p);
        by_form.insert((f.rank(), f), ());
    }
    by_form.into_keys().map(|(_, f)| f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::closed_path_certificate;
    use crate::shapes::{frame3, ring22};

    #[test]
    fn canonical_form_is_invariant() {
        let f = canonical_form(&frame3());
        assert_eq!(canonical_form(&frame3().translate(7, -3)), f);
        assert_eq!(canonical_form(&frame3().transform(Symmetry::ROT90)), f);
        let r = ring22();
        let orbit: Vec<CanonicalForm> = Symmetry::ALL.iter().map(|&s| canonical_form(&r.transform(s))).collect();
        assert!(orbit.iter().all(|g| *g == orbit[0]));
        assert_eq!(canonical_form(&orbit[0].polyomino()), orbit[0]);
    }

    #[test]
    fn rank_eight_is_the_frame() {
        let all = enumerate_closed_paths(8);
        assert_eq!(all, vec![canonical_form(&frame3())]);
        assert!(enumerate_closed_paths(7).is_empty());
    }

    #[test]
    fn emitted_shapes_are_closed_paths() {
        for f in enumerate_closed_paths(12) {
            let p = f.polyomino();
            assert!(closed_path_certificate(&p).is_some());
            assert_eq!(f.rank() % 2, 0);
        }
    }
}
