//! Inner 2-minors and the toric maps attached to marked vertex sets.
//!
//! Vertex variables `x_r` are indexed by the vertices of the polyomino in
//! lexicographic order. A toric map sends `x_r` to `v_i h_j w^k`, where
//! `v_i` and `h_j` name the maximal vertical and horizontal edge intervals
//! through `r` and `k = 1` exactly on the marked vertices.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use polyprime_algebra::{BigInt, BigIntMatrix, Binomial, IntMatrix, Monomial};

use crate::classify::{is_maximal_ladder, LConfiguration, Ladder};
use crate::error::IdealError;
use crate::grid::{Cell, EdgeInterval, Orientation, Point, Polyomino};
use crate::symmetry::Symmetry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VariableId {
    Vertex(Point),
    VEdge(usize),
    HEdge(usize),
    W,
}

impl VariableId {
    pub fn name(&self) -> String {
        let coord = |c: i32| if c < 0 { format!("m{}", -c) } else { c.to_string() };
        match self {
            VariableId::Vertex(p) => format!("x_{}_{}", coord(p.x), coord(p.y)),
            VariableId::VEdge(i) => format!("v{i}"),
            VariableId::HEdge(j) => format!("h{j}"),
            VariableId::W => "w".to_string(),
        }
    }
}

/// The polynomial ring `K[x_r : r ∈ V(P)]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRing {
    points: Vec<Point>,
}

impl VertexRing {
    pub fn of(p: &Polyomino) -> Self {
        VertexRing {
            points: p.vertices().into_iter().collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn index(&self, p: &Point) -> Option<usize> {
        self.points.binary_search(p).ok()
    }

    pub fn variables(&self) -> Vec<VariableId> {
        self.points.iter().map(|&p| VariableId::Vertex(p)).collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.variables().iter().map(VariableId::name).collect()
    }

    /// The monomial `∏ x_p` over the given points (with multiplicity).
    pub fn monomial(&self, pts: &[Point]) -> Monomial {
        let mut e = vec![0u32; self.nvars()];
        for p in pts {
            e[self.index(p).expect("point is a vertex")] += 1;
        }
        Monomial::new(e)
    }

    /// The 2-minor `x_a x_b − x_c x_d` of a proper interval `[a, b]`.
    pub fn minor(&self, a: &Point, b: &Point) -> Binomial {
        let c = Point::new(a.x, b.y);
        let d = Point::new(b.x, a.y);
        Binomial {
            plus: self.monomial(&[*a, *b]),
            minus: self.monomial(&[c, d]),
        }
    }
}

/// One inner 2-minor per inner interval, in inner-interval order.
pub fn inner_minors(p: &Polyomino) -> Vec<Binomial> {
    let ring = VertexRing::of(p);
    p.inner_intervals().iter().map(|iv| ring.minor(&iv.a, &iv.b)).collect()
}

/// A vertex-to-monomial assignment `x_r ↦ v_i h_j w^k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricMap {
    ring: VertexRing,
    vertical: Vec<EdgeInterval>,
    horizontal: Vec<EdgeInterval>,
    marked: BTreeSet<Point>,
    has_w: bool,
    images: Vec<Monomial>,
}

impl ToricMap {
    pub fn ring(&self) -> &VertexRing {
        &self.ring
    }

    pub fn marked(&self) -> &BTreeSet<Point> {
        &self.marked
    }

    pub fn vertical_intervals(&self) -> &[EdgeInterval] {
        &self.vertical
    }

    pub fn horizontal_intervals(&self) -> &[EdgeInterval] {
        &self.horizontal
    }

    /// Target variables: all `v_i`, then all `h_j`, then `w` if any vertex
    /// is marked.
    pub fn target_variables(&self) -> Vec<VariableId> {
        let mut out: Vec<VariableId> = (0..self.vertical.len()).map(VariableId::VEdge).collect();
        out.extend((0..self.horizontal.len()).map(VariableId::HEdge));
        if self.has_w {
            out.push(VariableId::W);
        }
        out
    }

    pub fn target_names(&self) -> Vec<String> {
        self.target_variables().iter().map(VariableId::name).collect()
    }

    pub fn ntarget(&self) -> usize {
        self.vertical.len() + self.horizontal.len() + usize::from(self.has_w)
    }

    /// `φ(x_p)` as an exponent vector over the target variables.
    pub fn image(&self, p: &Point) -> Option<&Monomial> {
        self.ring.index(p).map(|k| &self.images[k])
    }

    pub fn images(&self) -> &[Monomial] {
        &self.images
    }

    /// `φ(x^e)`.
    pub fn image_of(&self, m: &Monomial) -> Monomial {
        let mut e = vec![0u32; self.ntarget()];
        for (k, &ek) in m.exponents().iter().enumerate() {
            for (t, &it) in self.images[k].exponents().iter().enumerate() {
                e[t] += ek * it;
            }
        }
        Monomial::new(e)
    }

    /// `φ(f⁺) − φ(f⁻)`; zero exactly when `f ∈ ker φ`.
    pub fn evaluate(&self, f: &Binomial) -> Binomial {
        Binomial {
            plus: self.image_of(&f.plus),
            minus: self.image_of(&f.minus),
        }
    }

    /// Column `r` is the exponent vector of `φ(x_r)`.
    pub fn exponent_matrix(&self) -> BigIntMatrix {
        let rows: Vec<Vec<i64>> = (0..self.ntarget())
            .map(|t| self.images.iter().map(|m| m.exponent(t) as i64).collect())
            .collect();
        IntMatrix::from_i64_rows(&rows).expect("rectangular")
    }
}

/// The toric map with `w` on exactly the given vertices.
pub fn toric_map_marked(p: &Polyomino, marked: &BTreeSet<Point>) -> Result<ToricMap, IdealError> {
    let ring = VertexRing::of(p);
    if let Some(bad) = marked.iter().find(|v| ring.index(v).is_none()) {
        return Err(IdealError::ForeignVertex(*bad));
    }
    let vertical = p.maximal_edge_intervals(Orientation::Vertical);
    let horizontal = p.maximal_edge_intervals(Orientation::Horizontal);
    let has_w = !marked.is_empty();
    let ntarget = vertical.len() + horizontal.len() + usize::from(has_w);
    let images = ring
        .points()
        .iter()
        .map(|r| {
            let mut e = vec![0u32; ntarget];
            let i = vertical.iter().position(|iv| iv.contains_point(r)).expect("vertex on a vertical interval");
            let j = horizontal
                .iter()
                .position(|iv| iv.contains_point(r))
                .expect("vertex on a horizontal interval");
            e[i] = 1;
            e[vertical.len() + j] = 1;
            if marked.contains(r) {
                e[ntarget - 1] = 1;
            }
            Monomial::new(e)
        })
        .collect();
    Ok(ToricMap {
        ring,
        vertical,
        horizontal,
        marked: marked.clone(),
        has_w,
        images,
    })
}

/// `w` on the four corners of the corner cell `A_3`.
pub fn toric_map_lconfig(p: &Polyomino, l: &LConfiguration) -> Result<ToricMap, IdealError> {
    if !l.is_valid_in(p) {
        return Err(IdealError::InvalidLConfiguration);
    }
    toric_map_marked(p, &l.corner().vertices().into_iter().collect())
}

/// Where the marked set of a ladder comes from, in the pose where the
/// blocks are horizontal and `B_m` lies below `B_{m−1}` with its contact
/// cell under the rightmost cell `A_n` of `B_{m−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderPose {
    pub symmetry: Symmetry,
    /// Lower-left corners of the cells of `B_{m−1}`, left to right.
    pub a_corners: Vec<Point>,
    pub a: Point,
    pub b: Point,
    pub d: Point,
}

impl LadderPose {
    /// `{a_1, …, a_n, d, a, b}` pulled back to the original coordinates.
    pub fn marked(&self) -> BTreeSet<Point> {
        let inv = self.symmetry.inverse();
        self.a_corners
            .iter()
            .chain([&self.d, &self.a, &self.b])
            .map(|p| inv.apply_point(p))
            .collect()
    }
}

/// Finds the first symmetry (in [`Symmetry::ALL`] order) that puts the
/// last two blocks of `ladder` into the reference pose.
pub fn ladder_pose(ladder: &Ladder) -> Result<LadderPose, IdealError> {
    let m = ladder.blocks.len();
    if m < 2 {
        return Err(IdealError::InvalidLadder("fewer than two blocks".into()));
    }
    for s in Symmetry::ALL {
        let prev = s.apply_block(&ladder.blocks[m - 2]);
        let last = s.apply_block(&ladder.blocks[m - 1]);
        if prev.orientation != Orientation::Horizontal {
            continue;
        }
        let mut row: Vec<Cell> = prev.cells.clone();
        row.sort();
        let an = *row.last().expect("nonempty block");
        let below = an.offset(0, -1);
        if !last.cells.contains(&below) {
            continue;
        }
        return Ok(LadderPose {
            symmetry: s,
            a_corners: row.iter().map(Cell::lower_left).collect(),
            a: below.lower_left(),
            b: below.upper_right(),
            d: Point::new(below.x + 1, below.y),
        });
    }
    Err(IdealError::InvalidLadder("no symmetry reaches the reference pose".into()))
}

/// `w` on `L_B` for a maximal ladder with at least three steps.
pub fn toric_map_ladder(p: &Polyomino, ladder: &Ladder) -> Result<ToricMap, IdealError> {
    if ladder.steps() < 3 {
        return Err(IdealError::InvalidLadder("fewer than three steps".into()));
    }
    if !ladder.is_valid_in(p) {
        return Err(IdealError::InvalidLadder("conditions fail in this polyomino".into()));
    }
    if !is_maximal_ladder(p, ladder) {
        return Err(IdealError::InvalidLadder("not maximal".into()));
    }
    toric_map_marked(p, &ladder_pose(ladder)?.marked())
}

/// Whether every inner 2-minor of `p` lies in the kernel of `phi`.
pub fn check_containment(p: &Polyomino, phi: &ToricMap) -> bool {
    inner_minors(p).iter().all(|g| phi.evaluate(g).is_zero())
}

fn monomial_text(m: &Monomial, names: &[String]) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(k, &e)| if e == 1 { names[k].clone() } else { format!("{}^{}", names[k], e) })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn binomial_text(b: &Binomial, names: &[String]) -> String {
    format!("{} - {}", monomial_text(&b.plus, names), monomial_text(&b.minus, names))
}

/// Plain exchange text: a `variables:` line, then one binomial per line.
pub fn exchange_text(names: &[String], gens: &[Binomial]) -> String {
    let mut out = format!("variables: {}\n", names.join(" "));
    for g in gens {
        out.push_str(&binomial_text(g, names));
        out.push('\n');
    }
    out
}

/// Re-exported for callers that build matrices by hand.
pub type ExponentMatrix = IntMatrix<BigInt>;
