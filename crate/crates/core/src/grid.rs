//! Cells, lattice points, intervals and polyominoes.
//!
//! A cell is named by its lower-left corner `(x, y)` and occupies the
//! closed square `[(x, y), (x+1, y+1)]`. Every ordering exposed here is
//! lexicographic on coordinates, so all derived lists are deterministic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GridError;
use crate::symmetry::Symmetry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(i32, i32)", into = "(i32, i32)")]
pub struct Point {
    pub x: i32,
    pub y: i32,
}

impl Point {
    pub const fn new(x: i32, y: i32) -> Self {
        Point { x, y }
    }

    /// Componentwise partial order.
    pub fn leq(&self, other: &Point) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    pub fn comparable(&self, other: &Point) -> bool {
        self.leq(other) || other.leq(self)
    }

    pub fn offset(&self, dx: i32, dy: i32) -> Point {
        Point::new(self.x + dx, self.y + dy)
    }
}

impl From<(i32, i32)> for Point {
    fn from((x, y): (i32, i32)) -> Self {
        Point { x, y }
    }
}

impl From<Point> for (i32, i32) {
    fn from(p: Point) -> Self {
        (p.x, p.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(i32, i32)", into = "(i32, i32)")]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl From<(i32, i32)> for Cell {
    fn from((x, y): (i32, i32)) -> Self {
        Cell { x, y }
    }
}

impl From<Cell> for (i32, i32) {
    fn from(c: Cell) -> Self {
        (c.x, c.y)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

impl Orientation {
    pub fn other(self) -> Orientation {
        match self {
            Orientation::Horizontal => Orientation::Vertical,
            Orientation::Vertical => Orientation::Horizontal,
        }
    }
}

/// A unit segment between two adjacent lattice points, stored with
/// `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub a: Point,
    pub b: Point,
}

impl Edge {
    pub fn new(p: Point, q: Point) -> Self {
        if p <= q {
            Edge { a: p, b: q }
        } else {
            Edge { a: q, b: p }
        }
    }

    pub fn orientation(&self) -> Orientation {
        if self.a.y == self.b.y {
            Orientation::Horizontal
        } else {
            Orientation::Vertical
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.a == *p || self.b == *p
    }
}

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Cell { x, y }
    }

    pub fn lower_left(&self) -> Point {
        Point::new(self.x, self.y)
    }

    pub fn upper_right(&self) -> Point {
        Point::new(self.x + 1, self.y + 1)
    }

    /// Corners in the order lower-left, lower-right, upper-left, upper-right.
    pub fn vertices(&self) -> [Point; 4] {
        [
            Point::new(self.x, self.y),
            Point::new(self.x + 1, self.y),
            Point::new(self.x, self.y + 1),
            Point::new(self.x + 1, self.y + 1),
        ]
    }

    /// Bottom, top, left, right.
    pub fn edges(&self) -> [Edge; 4] {
        let [ll, lr, ul, ur] = self.vertices();
        [Edge::new(ll, lr), Edge::new(ul, ur), Edge::new(ll, ul), Edge::new(lr, ur)]
    }

    /// Left, right, down, up.
    pub fn neighbors(&self) -> [Cell; 4] {
        [
            Cell::new(self.x - 1, self.y),
            Cell::new(self.x + 1, self.y),
            Cell::new(self.x, self.y - 1),
            Cell::new(self.x, self.y + 1),
        ]
    }

    pub fn offset(&self, dx: i32, dy: i32) -> Cell {
        Cell::new(self.x + dx, self.y + dy)
    }

    /// Shares an edge.
    pub fn is_adjacent(&self, other: &Cell) -> bool {
        (self.x - other.x).abs() + (self.y - other.y).abs() == 1
    }

    /// Shares at least one vertex (includes equality).
    pub fn touches(&self, other: &Cell) -> bool {
        (self.x - other.x).abs() <= 1 && (self.y - other.y).abs() <= 1
    }

    pub fn shared_edge(&self, other: &Cell) -> Option<Edge> {
        if !self.is_adjacent(other) {
            return None;
        }
        let mine = self.edges();
        other.edges().into_iter().find(|e| mine.contains(e))
    }
}

/// The interval `[a, b]` of ℤ² with `a ≤ b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticeInterval {
    pub a: Point,
    pub b: Point,
}

impl LatticeInterval {
    pub fn new(a: Point, b: Point) -> Result<Self, GridError> {
        if !a.leq(&b) {
            return Err(GridError::NotAnInterval(a, b));
        }
        Ok(LatticeInterval { a, b })
    }

    pub fn of_cell(c: &Cell) -> Self {
        LatticeInterval {
            a: c.lower_left(),
            b: c.upper_right(),
        }
    }

    pub fn is_proper(&self) -> bool {
        self.a.x < self.b.x && self.a.y < self.b.y
    }

    pub fn diagonal_corners(&self) -> [Point; 2] {
        [self.a, self.b]
    }

    /// Upper-left, then lower-right.
    pub fn anti_diagonal_corners(&self) -> [Point; 2] {
        [Point::new(self.a.x, self.b.y), Point::new(self.b.x, self.a.y)]
    }

    pub fn corners(&self) -> [Point; 4] {
        let [c, d] = self.anti_diagonal_corners();
        [self.a, self.b, c, d]
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        self.a.leq(p) && p.leq(&self.b)
    }

    pub fn contains_interval(&self, other: &LatticeInterval) -> bool {
        self.contains_point(&other.a) && self.contains_point(&other.b)
    }

    pub fn width(&self) -> i32 {
        self.b.x - self.a.x
    }

    pub fn height(&self) -> i32 {
        self.b.y - self.a.y
    }

    /// The cells covered by the interval.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (self.a.x..self.b.x).flat_map(move |x| (self.a.y..self.b.y).map(move |y| Cell::new(x, y)))
    }

    /// Lattice points of the intersection, if nonempty.
    pub fn intersection(&self, other: &LatticeInterval) -> Option<LatticeInterval> {
        let a = Point::new(self.a.x.max(other.a.x), self.a.y.max(other.a.y));
        let b = Point::new(self.b.x.min(other.b.x), self.b.y.min(other.b.y));
        a.leq(&b).then_some(LatticeInterval { a, b })
    }

    /// Number of lattice points.
    pub fn point_count(&self) -> i64 {
        (self.width() as i64 + 1) * (self.height() as i64 + 1)
    }
}

impl fmt::Display for LatticeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// A maximal run of unit edges of a polyomino on one grid line.
///
/// For a horizontal interval `line` is the `y` coordinate and `[lo, hi]`
/// the `x` range; for a vertical one the roles swap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeInterval {
    pub orientation: Orientation,
    pub line: i32,
    pub lo: i32,
    pub hi: i32,
}

impl EdgeInterval {
    pub fn contains_point(&self, p: &Point) -> bool {
        match self.orientation {
            Orientation::Horizontal => p.y == self.line && self.lo <= p.x && p.x <= self.hi,
            Orientation::Vertical => p.x == self.line && self.lo <= p.y && p.y <= self.hi,
        }
    }

    pub fn len(&self) -> i32 {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.hi == self.lo
    }

    pub fn endpoints(&self) -> [Point; 2] {
        match self.orientation {
            Orientation::Horizontal => [Point::new(self.lo, self.line), Point::new(self.hi, self.line)],
            Orientation::Vertical => [Point::new(self.line, self.lo), Point::new(self.line, self.hi)],
        }
    }
}

/// A straight run of consecutive cells.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Block {
    pub orientation: Orientation,
    pub cells: Vec<Cell>,
}

impl Block {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn vertices(&self) -> BTreeSet<Point> {
        self.cells.iter().flat_map(|c| c.vertices()).collect()
    }

    pub fn first(&self) -> Cell {
        self.cells[0]
    }

    pub fn last(&self) -> Cell {
        self.cells[self.cells.len() - 1]
    }
}

/// Edge-connectivity of a cell set. The empty set is not connected.
pub fn is_connected(cells: &BTreeSet<Cell>) -> bool {
    let Some(&start) = cells.iter().next() else {
        return false;
    };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for n in c.neighbors() {
            if cells.contains(&n) && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.len() == cells.len()
}

/// Shortcuts a walk of edge-adjacent cells into a path between the same
/// endpoints: whenever a cell repeats, the loop between its two visits is
/// cut out.
pub fn walk_to_path(walk: &[Cell]) -> Result<Vec<Cell>, GridError> {
    for (i, w) in walk.windows(2).enumerate() {
        if !w[0].is_adjacent(&w[1]) {
            return Err(GridError::NotAWalk { index: i + 1 });
        }
    }
    let mut path: Vec<Cell> = Vec::with_capacity(walk.len());
    let mut position: BTreeMap<Cell, usize> = BTreeMap::new();
    for &c in walk {
        if let Some(&k) = position.get(&c) {
            for removed in path.drain(k + 1..) {
                position.remove(&removed);
            }
        } else {
            position.insert(c, path.len());
            path.push(c);
        }
    }
    Ok(path)
}

/// A nonempty, edge-connected finite set of cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolyominoRepr", into = "PolyominoRepr")]
pub struct Polyomino {
    cells: BTreeSet<Cell>,
}

#[derive(Serialize, Deserialize)]
struct PolyominoRepr {
    cells: Vec<Cell>,
}

impl TryFrom<PolyominoRepr> for Polyomino {
    type Error = GridError;

    fn try_from(r: PolyominoRepr) -> Result<Self, GridError> {
        Polyomino::new(r.cells)
    }
}

impl From<Polyomino> for PolyominoRepr {
    fn from(p: Polyomino) -> Self {
        PolyominoRepr {
            cells: p.cells.into_iter().collect(),
        }
    }
}

impl Polyomino {
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Self, GridError> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(GridError::Empty);
        }
        if !is_connected(&cells) {
            return Err(GridError::Disconnected);
        }
        Ok(Polyomino { cells })
    }

    pub fn from_coords(coords: &[(i32, i32)]) -> Result<Self, GridError> {
        Polyomino::new(coords.iter().map(|&(x, y)| Cell::new(x, y)))
    }

    /// `w × h` cells with lower-left cell at `origin`.
    pub fn rectangle(origin: Cell, w: i32, h: i32) -> Result<Self, GridError> {
        Polyomino::new((0..w).flat_map(|i| (0..h).map(move |j| origin.offset(i, j))))
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn rank(&self) -> usize {
        self.cells.len()
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.contains(c)
    }

    pub fn neighbor_count(&self, c: &Cell) -> usize {
        c.neighbors().iter().filter(|n| self.cells.contains(n)).count()
    }

    pub fn vertices(&self) -> BTreeSet<Point> {
        self.cells.iter().flat_map(|c| c.vertices()).collect()
    }

    pub fn edges(&self) -> BTreeSet<Edge> {
        self.cells.iter().flat_map(|c| c.edges()).collect()
    }

    /// Edges belonging to exactly one cell.
    pub fn border_edges(&self) -> BTreeSet<Edge> {
        let mut count: BTreeMap<Edge, u8> = BTreeMap::new();
        for c in &self.cells {
            for e in c.edges() {
                *count.entry(e).or_default() += 1;
            }
        }
        count.into_iter().filter(|&(_, n)| n == 1).map(|(e, _)| e).collect()
    }

    /// Lower-left and upper-right cells of the bounding box.
    pub fn bounding_box(&self) -> (Cell, Cell) {
        let xs = self.cells.iter().map(|c| c.x);
        let ys = self.cells.iter().map(|c| c.y);
        let (x0, x1) = (xs.clone().min().unwrap(), xs.max().unwrap());
        let (y0, y1) = (ys.clone().min().unwrap(), ys.max().unwrap());
        (Cell::new(x0, y0), Cell::new(x1, y1))
    }

    pub fn translate(&self, dx: i32, dy: i32) -> Polyomino {
        Polyomino {
            cells: self.cells.iter().map(|c| c.offset(dx, dy)).collect(),
        }
    }

    pub fn transform(&self, s: Symmetry) -> Polyomino {
        Polyomino {
            cells: self.cells.iter().map(|c| s.apply_cell(c)).collect(),
        }
    }

    /// Translated so that the bounding box starts at `(0, 0)`.
    pub fn normalized(&self) -> Polyomino {
        let (lo, _) = self.bounding_box();
        self.translate(-lo.x, -lo.y)
    }

    /// Connected components of the complement that do not reach the
    /// exterior, computed by flood fill in the bounding box grown by one
    /// ring of cells.
    pub fn holes(&self) -> Vec<Polyomino> {
        let (lo, hi) = self.bounding_box();
        let (x0, y0, x1, y1) = (lo.x - 1, lo.y - 1, hi.x + 1, hi.y + 1);
        let inside = |c: &Cell| x0 <= c.x && c.x <= x1 && y0 <= c.y && c.y <= y1;
        let mut free: BTreeSet<Cell> = (x0..=x1)
            .flat_map(|x| (y0..=y1).map(move |y| Cell::new(x, y)))
            .filter(|c| !self.cells.contains(c))
            .collect();
        let mut components = Vec::new();
        let mut exterior_found = false;
        while let Some(&start) = free.iter().next() {
            free.remove(&start);
            let mut comp = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(c) = queue.pop_front() {
                for n in c.neighbors() {
                    if inside(&n) && free.remove(&n) {
                        comp.insert(n);
                        queue.push_back(n);
                    }
                }
            }
            // The first free cell in lexicographic order is the corner of
            // the grown box, so the first component is the exterior.
            if !exterior_found {
                exterior_found = true;
                continue;
            }
            components.push(Polyomino { cells: comp });
        }
        components
    }

    pub fn is_simple(&self) -> bool {
        self.holes().is_empty()
    }

    pub fn maximal_edge_intervals(&self, orientation: Orientation) -> Vec<EdgeInterval> {
        // (line, start of unit segment)
        let mut units: BTreeSet<(i32, i32)> = BTreeSet::new();
        for c in &self.cells {
            match orientation {
                Orientation::Horizontal => {
                    units.insert((c.y, c.x));
                    units.insert((c.y + 1, c.x));
                }
                Orientation::Vertical => {
                    units.insert((c.x, c.y));
                    units.insert((c.x + 1, c.y));
                }
            }
        }
        let mut out: Vec<EdgeInterval> = Vec::new();
        for (line, k) in units {
            match out.last_mut() {
                Some(iv) if iv.line == line && iv.hi == k => iv.hi = k + 1,
                _ => out.push(EdgeInterval {
                    orientation,
                    line,
                    lo: k,
                    hi: k + 1,
                }),
            }
        }
        out
    }

    /// All proper intervals whose cells lie in the polyomino, sorted by
    /// `(a, b)`.
    pub fn inner_intervals(&self) -> Vec<LatticeInterval> {
        let mut out = Vec::new();
        for c in &self.cells {
            // Grow upwards row by row, tracking the widest run to the right
            // available in every row so far.
            let mut max_w = i32::MAX;
            let mut h = 0;
            while self.cells.contains(&c.offset(0, h)) {
                let mut w = 0;
                while w < max_w && self.cells.contains(&c.offset(w, h)) {
                    w += 1;
                }
                max_w = w;
                for ww in 1..=max_w {
                    out.push(LatticeInterval {
                        a: c.lower_left(),
                        b: Point::new(c.x + ww, c.y + h + 1),
                    });
                }
                h += 1;
            }
        }
        out.sort();
        out
    }

    pub fn is_inner_interval(&self, iv: &LatticeInterval) -> bool {
        iv.is_proper() && iv.cells().all(|c| self.cells.contains(&c))
    }

    /// Maximal runs of consecutive cells in one direction, sorted by line
    /// and then by starting cell.
    pub fn maximal_blocks(&self, orientation: Orientation) -> Vec<Block> {
        let key = |c: &Cell| match orientation {
            Orientation::Horizontal => (c.y, c.x),
            Orientation::Vertical => (c.x, c.y),
        };
        let mut sorted: Vec<Cell> = self.cells.iter().copied().collect();
        sorted.sort_by_key(key);
        let mut out: Vec<Block> = Vec::new();
        for c in sorted {
            let (line, k) = key(&c);
            match out.last_mut() {
                Some(b) if key(&b.last()) == (line, k - 1) => b.cells.push(c),
                _ => out.push(Block {
                    orientation,
                    cells: vec![c],
                }),
            }
        }
        out
    }

    /// The maximal edge interval of the given orientation through `p`.
    pub fn edge_interval_through(&self, p: &Point, orientation: Orientation) -> Option<EdgeInterval> {
        self.maximal_edge_intervals(orientation)
            .into_iter()
            .find(|iv| iv.contains_point(p))
    }
}

impl fmt::Display for Polyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::to_grid(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame3() -> Polyomino {
        Polyomino::from_coords(&[(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (1, 2), (0, 2), (0, 1)]).unwrap()
    }

    #[test]
    fn vertices_of_small_shapes() {
        let domino = Polyomino::from_coords(&[(0, 0), (1, 0)]).unwrap();
        let v: Vec<(i32, i32)> = domino.vertices().into_iter().map(Into::into).collect();
        assert_eq!(v, vec![(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]);
        assert_eq!(frame3().vertices().len(), 16);
        let single = Polyomino::from_coords(&[(5, 7)]).unwrap();
        let v: BTreeSet<Point> = single.vertices();
        assert_eq!(
            v,
            BTreeSet::from([Point::new(5, 7), Point::new(6, 7), Point::new(5, 8), Point::new(6, 8)])
        );
    }

    #[test]
    fn connectivity() {
        let set = |v: &[(i32, i32)]| v.iter().map(|&c| Cell::from(c)).collect::<BTreeSet<_>>();
        assert!(is_connected(&set(&[(0, 0), (1, 0)])));
        assert!(!is_connected(&set(&[(0, 0), (1, 1)])));
        assert!(!is_connected(&BTreeSet::new()));
        assert!(is_connected(frame3().cells()));
        assert_eq!(Polyomino::new(Vec::new()), Err(GridError::Empty));
        assert_eq!(Polyomino::from_coords(&[(0, 0), (1, 1)]), Err(GridError::Disconnected));
    }

    #[test]
    fn walk_shortcuts() {
        let c = |x, y| Cell::new(x, y);
        assert_eq!(walk_to_path(&[c(0, 0), c(1, 0), c(0, 0), c(0, 1)]).unwrap(), vec![c(0, 0), c(0, 1)]);
        let path = vec![c(0, 0), c(1, 0), c(1, 1)];
        assert_eq!(walk_to_path(&path).unwrap(), path);
        assert_eq!(
            walk_to_path(&[c(0, 0), c(1, 0), c(1, 1), c(1, 0), c(2, 0)]).unwrap(),
            vec![c(0, 0), c(1, 0), c(2, 0)]
        );
        assert_eq!(walk_to_path(&[c(0, 0), c(2, 0)]), Err(GridError::NotAWalk { index: 1 }));
    }

    #[test]
    fn holes_of_frame_and_rectangle() {
        let h = frame3().holes();
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].cells().iter().copied().collect::<Vec<_>>(), vec![Cell::new(1, 1)]);
        assert!(Polyomino::rectangle(Cell::new(0, 0), 2, 3).unwrap().is_simple());
        assert!(!frame3().is_simple());
        assert!(Polyomino::from_coords(&[(0, 0), (1, 0), (1, 1)]).unwrap().is_simple());
    }

    #[test]
    fn edge_intervals_of_frame() {
        let h = frame3().maximal_edge_intervals(Orientation::Horizontal);
        assert_eq!(h.len(), 4);
        for (i, iv) in h.iter().enumerate() {
            assert_eq!((iv.line, iv.lo, iv.hi), (i as i32, 0, 3));
        }
        let v = frame3().maximal_edge_intervals(Orientation::Vertical);
        assert_eq!(v.len(), 4);
        assert!(v.iter().all(|iv| iv.lo == 0 && iv.hi == 3));
        let domino = Polyomino::from_coords(&[(0, 0), (1, 0)]).unwrap();
        let dv = domino.maximal_edge_intervals(Orientation::Vertical);
        assert_eq!(dv.iter().map(|iv| (iv.line, iv.len())).collect::<Vec<_>>(), vec![(0, 1), (1, 1), (2, 1)]);
    }

    #[test]
    fn inner_interval_counts() {
        let domino = Polyomino::from_coords(&[(0, 0), (1, 0)]).unwrap();
        assert_eq!(domino.inner_intervals().len(), 3);
        assert_eq!(frame3().inner_intervals().len(), 20);
        assert_eq!(Polyomino::rectangle(Cell::new(0, 0), 2, 2).unwrap().inner_intervals().len(), 9);
    }

    #[test]
    fn blocks_of_frame() {
        let b = frame3().maximal_blocks(Orientation::Horizontal);
        let lens: Vec<usize> = b.iter().map(Block::len).collect();
        assert_eq!(lens, vec![3, 1, 1, 3]);
        let single = Polyomino::from_coords(&[(4, 4)]).unwrap();
        assert_eq!(single.maximal_blocks(Orientation::Vertical).len(), 1);
    }

    #[test]
    fn interval_corners() {
        let iv = LatticeInterval::new(Point::new(0, 0), Point::new(2, 1)).unwrap();
        assert_eq!(iv.anti_diagonal_corners(), [Point::new(0, 1), Point::new(2, 0)]);
        assert!(iv.is_proper());
        assert!(LatticeInterval::new(Point::new(1, 0), Point::new(0, 3)).is_err());
        assert_eq!(iv.cells().count(), 2);
    }
}
