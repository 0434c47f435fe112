//! Polyominoes assembled from a simple polyomino and paths: `P(S, C)` with
//! two triminoes, and rectangles linked to a simple polyomino by two paths.
//!
//! Constructors take the parts in final position and check every defining
//! condition, reporting the first one that fails by its number. Index 0 is
//! used for requirements on the parts themselves (shape classes, `m ≥ 4`,
//! `n ≥ 2`); index 7 for the goodness requirement of L-rectangles.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::classify::{trimino_certificate, OpenPath, Trimino};
use crate::error::FamilyError;
use crate::grid::{Cell, Edge, Orientation, Point, Polyomino};
use crate::symmetry::Symmetry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Psc,
    RectangleLinked,
    GoodLRectangle,
    LadderRectangle,
}

/// Parts of `P(S, C) = S ∪ C ∪ T_1 ∪ T_2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PscParts {
    pub s: Polyomino,
    pub c: OpenPath,
    pub t1: Polyomino,
    pub t2: Polyomino,
}

/// Parts of `P(R, P_1, S, P_2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectangleParts {
    pub r: Polyomino,
    pub p1: OpenPath,
    pub s: Polyomino,
    pub p2: OpenPath,
}

/// `q = σ(p) + shift`: the rigid motion putting `R` at `[(1,1), (m,n)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pose {
    pub symmetry: Symmetry,
    pub shift: (i32, i32),
}

impl Pose {
    pub fn point(&self, p: &Point) -> Point {
        self.symmetry.apply_point(p).offset(self.shift.0, self.shift.1)
    }

    pub fn cell(&self, c: &Cell) -> Cell {
        self.symmetry.apply_cell(c).offset(self.shift.0, self.shift.1)
    }

    pub fn edge(&self, e: &Edge) -> Edge {
        Edge::new(self.point(&e.a), self.point(&e.b))
    }

    pub fn unpoint(&self, q: &Point) -> Point {
        self.symmetry
            .inverse()
            .apply_point(&q.offset(-self.shift.0, -self.shift.1))
    }

    pub fn polyomino(&self, p: &Polyomino) -> Polyomino {
        Polyomino::new(p.cells().iter().map(|c| self.cell(c))).expect("rigid image is connected")
    }
}

/// A validated instance: its kind, its parts in original coordinates
/// (paths listed in path order) and, for rectangle families, the pose and
/// the size `(m, n)` of `R`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub parts: BTreeMap<String, Vec<Cell>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pose: Option<Pose>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub size: Option<(i32, i32)>,
    /// Length `s` of the first horizontal block of `P_1` (ladder-rectangles).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_block: Option<usize>,
}

fn vertices_of<'a>(cells: impl IntoIterator<Item = &'a Cell>) -> BTreeSet<Point> {
    cells.into_iter().flat_map(|c| c.vertices()).collect()
}

fn edges_of<'a>(cells: impl IntoIterator<Item = &'a Cell>) -> BTreeSet<Edge> {
    cells.into_iter().flat_map(|c| c.edges()).collect()
}

fn common<T: Ord + Clone>(a: &BTreeSet<T>, b: &BTreeSet<T>) -> Vec<T> {
    a.intersection(b).cloned().collect()
}

fn cond(index: usize, ok: bool, detail: &str) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::condition(index, detail))
    }
}

fn union(parts: &[&[Cell]]) -> Result<Polyomino, FamilyError> {
    let mut seen = BTreeSet::new();
    for part in parts {
        for c in *part {
            if !seen.insert(*c) {
                return Err(FamilyError::condition(1, format!("cell {c} belongs to two parts")));
            }
        }
    }
    Polyomino::new(seen).map_err(|_| FamilyError::condition(1, "the union is not connected"))
}

fn path_cells(p: &OpenPath) -> Vec<Cell> {
    p.cells.clone()
}

/// Validates `P(S, C)` and returns the union.
pub fn build_psc(parts: &PscParts) -> Result<(Polyomino, FamilySpec), FamilyError> {
    cond(0, parts.s.is_simple(), "S is not simple")?;
    cond(0, parts.c.validate(), "C is not an open path")?;
    let t1 = trimino_certificate(&parts.t1).ok_or_else(|| FamilyError::condition(0, "T1 is not a trimino"))?;
    let t2 = trimino_certificate(&parts.t2).ok_or_else(|| FamilyError::condition(0, "T2 is not a trimino"))?;

    let s_cells: Vec<Cell> = parts.s.cells().iter().copied().collect();
    let c_cells = path_cells(&parts.c);
    let (vs, vc) = (vertices_of(&s_cells), vertices_of(&c_cells));
    let (vt1, vt2) = (vertices_of(&t1.cells), vertices_of(&t2.cells));
    cond(2, common(&vs, &vc).is_empty(), "S and C share a vertex")?;
    cond(2, common(&vt1, &vt2).is_empty(), "T1 and T2 share a vertex")?;

    let p = union(&[&s_cells, &c_cells, &t1.cells, &t2.cells])?;

    let (es, ec) = (edges_of(&s_cells), edges_of(&c_cells));
    let hooked_end = |t: &Trimino, name: &str| -> Result<usize, FamilyError> {
        let shared = common(&es, &edges_of(&t.cells));
        let [v] = shared.as_slice() else {
            return Err(FamilyError::condition(3, format!("S and {name} share {} edges", shared.len())));
        };
        (0..2)
            .find(|&k| t.is_hooking_edge(k, v))
            .ok_or_else(|| FamilyError::condition(3, format!("the edge shared by S and {name} is not a hooking edge")))
    };
    let k1 = hooked_end(&t1, "T1")?;
    let k2 = hooked_end(&t2, "T2")?;

    let path_end_hook = |t: &Trimino, k: usize, end: &Cell, name: &str| -> Result<(), FamilyError> {
        let shared = common(&ec, &edges_of(&t.cells));
        let [w] = shared.as_slice() else {
            return Err(FamilyError::condition(4, format!("C and {name} share {} edges", shared.len())));
        };
        cond(4, end.edges().contains(w), &format!("the edge shared by C and {name} is not on the end cell"))?;
        cond(
            4,
            t.is_hooking_edge(1 - k, w),
            &format!("the edge shared by C and {name} is not a hooking edge of the other end"),
        )
    };
    path_end_hook(&t1, k1, &parts.c.first(), "T1")?;
    path_end_hook(&t2, k2, &parts.c.last(), "T2")?;

    for (a, b, what) in [
        (&vc, &vt1, "C and T1"),
        (&vs, &vt1, "S and T1"),
        (&vs, &vt2, "S and T2"),
        (&vc, &vt2, "C and T2"),
    ] {
        let k = common(a, b).len();
        cond(5, k == 2, &format!("{what} share {k} vertices"))?;
    }

    let spec = FamilySpec {
        kind: FamilyKind::Psc,
        parts: BTreeMap::from([
            ("S".to_string(), s_cells),
            ("C".to_string(), c_cells),
            ("T1".to_string(), t1.cells.to_vec()),
            ("T2".to_string(), t2.cells.to_vec()),
        ]),
        pose: None,
        size: None,
        first_block: None,
    };
    Ok((p, spec))
}

fn is_full_rectangle(p: &Polyomino) -> bool {
    let (lo, hi) = p.bounding_box();
    ((hi.x - lo.x + 1) * (hi.y - lo.y + 1)) as usize == p.rank()
}

/// The pose putting `R` at `[(1,1),(m,n)]` with the lower-left corner of
/// `C_1` at `(1,n)` and `V(P_1) ∩ V(R) = {(1,n),(2,n)}`.
fn find_pose(parts: &RectangleParts) -> Option<(Pose, i32, i32)> {
    for s in Symmetry::ALL {
        let r = parts.r.transform(s);
        let (lo, hi) = r.bounding_box();
        let shift = (1 - lo.x, 1 - lo.y);
        let pose = Pose { symmetry: s, shift };
        let (m, n) = (hi.x - lo.x + 2, hi.y - lo.y + 2);
        if pose.cell(&parts.p1.first()) != Cell::new(1, n) {
            continue;
        }
        let vr = vertices_of(&pose.polyomino(&parts.r).cells().iter().copied().collect::<Vec<_>>());
        let vp1 = vertices_of(&parts.p1.cells.iter().map(|c| pose.cell(c)).collect::<Vec<_>>());
        if common(&vr, &vp1) == vec![Point::new(1, n), Point::new(2, n)] {
            return Some((pose, m, n));
        }
    }
    None
}

/// Validates `P(R, P_1, S, P_2)` and, for the L- and ladder variants named
/// by `target`, their extra clauses.
pub fn build_rectangle_linked(
    parts: &RectangleParts,
    target: FamilyKind,
) -> Result<(Polyomino, FamilySpec), FamilyError> {
    cond(0, target != FamilyKind::Psc, "not a rectangle family")?;
    cond(0, is_full_rectangle(&parts.r), "R is not a rectangle")?;
    cond(0, parts.s.is_simple(), "S is not simple")?;
    cond(0, parts.p1.validate(), "P1 is not an open path")?;
    cond(0, parts.p2.validate(), "P2 is not an open path")?;

    let r_cells: Vec<Cell> = parts.r.cells().iter().copied().collect();
    let s_cells: Vec<Cell> = parts.s.cells().iter().copied().collect();
    let p1_cells = path_cells(&parts.p1);
    let p2_cells = path_cells(&parts.p2);
    let (vr, vs) = (vertices_of(&r_cells), vertices_of(&s_cells));
    let (vp1, vp2) = (vertices_of(&p1_cells), vertices_of(&p2_cells));
    cond(2, common(&vs, &vr).is_empty(), "S and R share a vertex")?;
    cond(2, common(&vp1, &vp2).is_empty(), "P1 and P2 share a vertex")?;

    let p = union(&[&r_cells, &p1_cells, &s_cells, &p2_cells])?;

    let (pose, m, n) = find_pose(parts).ok_or_else(|| {
        FamilyError::condition(3, "no rotation or reflection puts C1 at the top-left corner of R touching it in two vertices")
    })?;
    cond(0, m >= 4 && n >= 2, &format!("R spans [(1,1),({m},{n})]; need m ≥ 4 and n ≥ 2"))?;

    let es = edges_of(&s_cells);
    let ct = parts.p1.last();
    let shared = common(&edges_of([&ct]), &es);
    let (_, free_t) = parts.p1.free_edges();
    cond(4, shared.len() == 1 && free_t.contains(&shared[0]), "Ct and S do not share exactly one free edge")?;
    let k = common(&vp1, &vs).len();
    cond(4, k == 2, &format!("P1 and S share {k} vertices"))?;

    let f1 = parts.p2.first();
    let shared = common(&edges_of([&f1]), &es);
    let (free_1, free_p) = parts.p2.free_edges();
    cond(5, shared.len() == 1 && free_1.contains(&shared[0]), "F1 and S do not share exactly one free edge")?;
    let k = common(&vp2, &vs).len();
    cond(5, k == 2, &format!("P2 and S share {k} vertices"))?;

    let fp = parts.p2.last();
    let shared = common(&edges_of([&fp]), &edges_of(&r_cells));
    cond(6, shared.len() == 1 && free_p.contains(&shared[0]), "Fp and R do not share exactly one free edge")?;
    let k = common(&vp2, &vr).len();
    cond(6, k == 2, &format!("P2 and R share {k} vertices"))?;
    let v = pose.edge(&shared[0]);

    let mut spec = FamilySpec {
        kind: target,
        parts: BTreeMap::from([
            ("R".to_string(), r_cells),
            ("P1".to_string(), p1_cells),
            ("S".to_string(), s_cells),
            ("P2".to_string(), p2_cells),
        ]),
        pose: Some(pose),
        size: Some((m, n)),
        first_block: None,
    };

    let top = |v: &Edge| v.a.y == n && v.b.y == n && (3..m).contains(&v.a.x);
    let right = |v: &Edge| v.a.x == m && v.b.x == m && (1..n).contains(&v.a.y);
    let bottom = |v: &Edge| v.a.y == 1 && v.b.y == 1 && (3..m).contains(&v.a.x);
    match target {
        FamilyKind::GoodLRectangle => {
            let c2 = parts.p1.cells.get(1).map(|c| pose.cell(c));
            cond(3, c2 == Some(Cell::new(1, n + 1)), "C2 does not have lower-left corner (1, n+1)")?;
            cond(6, top(&v) || right(&v) || bottom(&v), "P2 meets R outside the allowed border edges")?;
            cond(7, check_good_l_rectangle(&p, &spec), "not good")?;
        }
        FamilyKind::LadderRectangle => {
            let s = ladder_first_block(&parts.p1.cells.iter().map(|c| pose.cell(c)).collect::<Vec<_>>())
                .ok_or_else(|| FamilyError::condition(3, "P1 does not start with two stacked horizontal blocks"))?;
            cond(6, top(&v), "P2 meets R outside the top border edges")?;
            spec.first_block = Some(s);
        }
        _ => {}
    }
    Ok((p, spec))
}

/// For `P_1` in pose: the `s` such that `[C_1, C_s]` and `[C_{s+1}, C_q]`
/// are maximal horizontal runs of the path with `s ≥ 2`, `q ≥ s + 2` and
/// `C_{s+1}` sitting on the upper-left corner of `C_s`.
fn ladder_first_block(cells: &[Cell]) -> Option<usize> {
    let run = |from: usize| -> usize {
        let mut k = from + 1;
        while k < cells.len() && cells[k].y == cells[from].y && (cells[k].x - cells[k - 1].x).abs() == 1 {
            k += 1;
        }
        k - from
    };
    let s = run(0);
    if s < 2 || s >= cells.len() {
        return None;
    }
    let (cs, next) = (cells[s - 1], cells[s]);
    if next.lower_left() != Point::new(cs.x, cs.y + 1) {
        return None;
    }
    (run(s) >= 2).then_some(s)
}

/// The shorter of two intervals; the first on a tie.
fn shorter(a: crate::grid::EdgeInterval, b: crate::grid::EdgeInterval) -> crate::grid::EdgeInterval {
    if b.len() < a.len() {
        b
    } else {
        a
    }
}

/// Checks the two cell-membership requirements for a good L-rectangle,
/// computed in the pose of `spec`.
pub fn check_good_l_rectangle(p: &Polyomino, spec: &FamilySpec) -> bool {
    let (Some(pose), Some((_, n))) = (spec.pose, spec.size) else {
        return false;
    };
    let q = pose.polyomino(p);
    let through = |pt: Point, o: Orientation| q.edge_interval_through(&pt, o);
    let (Some(v1), Some(v2)) = (
        through(Point::new(1, n), Orientation::Vertical),
        through(Point::new(2, n), Orientation::Vertical),
    ) else {
        return false;
    };
    let e = shorter(v1, v2);
    if !(e.lo..e.hi).all(|y| q.contains(&Cell::new(1, y))) {
        return false;
    }
    for k in 1..n {
        let (Some(hk), Some(hk1)) = (
            through(Point::new(1, k), Orientation::Horizontal),
            through(Point::new(1, k + 1), Orientation::Horizontal),
        ) else {
            return false;
        };
        let f = shorter(hk, hk1);
        if !(f.lo..f.hi).all(|x| q.contains(&Cell::new(x, k))) {
            return false;
        }
    }
    true
}

impl FamilySpec {
    /// `{v ∈ V(R) : v ≤ (2, n)}`, extended by the lower-left corners of
    /// `C_2, …, C_s` for ladder-rectangles; in original coordinates.
    pub fn rectangle_marking(&self) -> Option<BTreeSet<Point>> {
        let (pose, (_, n)) = (self.pose?, self.size?);
        let e = Point::new(2, n);
        let r = self.parts.get("R")?;
        let mut marked: BTreeSet<Point> = vertices_of(r.iter())
            .into_iter()
            .filter(|v| pose.point(v).leq(&e))
            .collect();
        if let Some(s) = self.first_block {
            let p1 = self.parts.get("P1")?;
            for c in &p1[1..s] {
                marked.insert(pose.unpoint(&pose.cell(c).lower_left()));
            }
        }
        Some(marked)
    }
}
