//! Recognizers for closed paths, open paths, triminoes, L-configurations
//! and ladders.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::grid::{Block, Cell, Edge, Orientation, Point, Polyomino};

/// A cyclic ordering `A_1, …, A_n` of the cells of a closed path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedPathCert {
    pub cycle: Vec<Cell>,
}

impl ClosedPathCert {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// Checks the defining conditions directly on the sequence:
    /// `n > 5`, consecutive cells share an edge, cells are distinct, and
    /// cells more than two steps apart (cyclically) share no vertex.
    pub fn validate(&self) -> bool {
        let c = &self.cycle;
        let n = c.len();
        if n <= 5 {
            return false;
        }
        if (0..n).any(|i| !c[i].is_adjacent(&c[(i + 1) % n])) {
            return false;
        }
        if c.iter().collect::<BTreeSet<_>>().len() != n {
            return false;
        }
        for i in 0..n {
            for j in 0..n {
                let d = (i as isize - j as isize).rem_euclid(n as isize) as usize;
                let cyc = d.min(n - d);
                if cyc > 2 && c[i].touches(&c[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Validates against a polyomino: same cell set and [`validate`].
    ///
    /// [`validate`]: ClosedPathCert::validate
    pub fn validate_for(&self, p: &Polyomino) -> bool {
        self.cycle.len() == p.rank() && self.cycle.iter().all(|c| p.contains(c)) && self.validate()
    }
}

/// The cycle of a closed path, starting at the least cell and continuing
/// towards its smaller neighbour; `None` if `p` is not a closed path.
pub fn closed_path_certificate(p: &Polyomino) -> Option<ClosedPathCert> {
    if p.rank() <= 5 || p.cells().iter().any(|c| p.neighbor_count(c) != 2) {
        return None;
    }
    let start = *p.cells().iter().next()?;
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = start
        .neighbors()
        .into_iter()
        .filter(|n| p.contains(n))
        .min()?;
    while cur != start {
        cycle.push(cur);
        let next = cur
            .neighbors()
            .into_iter()
            .find(|n| p.contains(n) && *n != prev)?;
        prev = cur;
        cur = next;
    }
    let cert = ClosedPathCert { cycle };
    (cert.len() == p.rank() && cert.validate()).then_some(cert)
}

/// Five cells `A_1, …, A_5` where `A_1, A_2, A_3` and `A_3, A_4, A_5` are
/// straight runs in orthogonal directions. The horizontal run is stored
/// first, so `cells[2]` is always the corner cell.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LConfiguration {
    pub cells: [Cell; 5],
}

impl LConfiguration {
    pub fn corner(&self) -> Cell {
        self.cells[2]
    }

    pub fn is_valid_in(&self, p: &Polyomino) -> bool {
        let c = &self.cells;
        let step = |a: &Cell, b: &Cell| (b.x - a.x, b.y - a.y);
        let d1 = step(&c[0], &c[1]);
        let d2 = step(&c[2], &c[3]);
        c.iter().all(|x| p.contains(x))
            && c.windows(2).all(|w| w[0].is_adjacent(&w[1]))
            && step(&c[1], &c[2]) == d1
            && step(&c[3], &c[4]) == d2
            && d1.0 * d2.0 + d1.1 * d2.1 == 0
    }
}

/// Every L-configuration of `p`, one per corner cell and pair of arm
/// directions, sorted.
pub fn find_l_configurations(p: &Polyomino) -> Vec<LConfiguration> {
    let mut out = Vec::new();
    for &a3 in p.cells() {
        for dh in [-1, 1] {
            for dv in [-1, 1] {
                let cells = [a3.offset(2 * dh, 0), a3.offset(dh, 0), a3, a3.offset(0, dv), a3.offset(0, 2 * dv)];
                if cells.iter().all(|c| p.contains(c)) {
                    out.push(LConfiguration { cells });
                }
            }
        }
    }
    out.sort();
    out
}

/// A chain of maximal parallel blocks of length at least two where
/// consecutive blocks share exactly two vertices and consecutive contact
/// segments never lie on one maximal edge interval.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Ladder {
    pub orientation: Orientation,
    pub blocks: Vec<Block>,
    /// `contacts[i]` is `V(B_i) ∩ V(B_{i+1})`, smaller point first.
    pub contacts: Vec<[Point; 2]>,
}

impl Ladder {
    pub fn steps(&self) -> usize {
        self.blocks.len()
    }

    pub fn reversed(&self) -> Ladder {
        let mut blocks = self.blocks.clone();
        blocks.reverse();
        let mut contacts = self.contacts.clone();
        contacts.reverse();
        Ladder {
            orientation: self.orientation,
            blocks,
            contacts,
        }
    }

    /// Re-checks every ladder condition against `p`.
    pub fn is_valid_in(&self, p: &Polyomino) -> bool {
        let maximal: BTreeSet<Block> = p.maximal_blocks(self.orientation).into_iter().collect();
        if self.blocks.len() < 2
            || self.contacts.len() + 1 != self.blocks.len()
            || self
                .blocks
                .iter()
                .any(|b| b.len() < 2 || b.orientation != self.orientation || !maximal.contains(b))
            || self.blocks.iter().collect::<BTreeSet<_>>().len() != self.blocks.len()
        {
            return false;
        }
        let intervals = LadderContext::new(p, self.orientation);
        for (i, w) in self.blocks.windows(2).enumerate() {
            match contact(&w[0], &w[1]) {
                Some(c) if c == self.contacts[i] => {}
                _ => return false,
            }
        }
        self.contacts
            .windows(2)
            .all(|w| !intervals.same_interval(&w[0], &w[1]))
    }
}

/// `V(A) ∩ V(B)` when it has exactly two points.
fn contact(a: &Block, b: &Block) -> Option<[Point; 2]> {
    let va = a.vertices();
    let common: Vec<Point> = b.vertices().into_iter().filter(|v| va.contains(v)).collect();
    match common.as_slice() {
        [p, q] => Some([*p, *q]),
        _ => None,
    }
}

struct LadderContext {
    edge_intervals: Vec<crate::grid::EdgeInterval>,
}

impl LadderContext {
    fn new(p: &Polyomino, orientation: Orientation) -> Self {
        // Contacts of horizontal blocks are horizontal segments, and vice
        // versa.
        LadderContext {
            edge_intervals: p.maximal_edge_intervals(orientation),
        }
    }

    fn same_interval(&self, s: &[Point; 2], t: &[Point; 2]) -> bool {
        self.edge_intervals.iter().any(|iv| {
            iv.contains_point(&s[0]) && iv.contains_point(&s[1]) && iv.contains_point(&t[0]) && iv.contains_point(&t[1])
        })
    }
}

/// All ladders with at least `min_steps` blocks that cannot be extended at
/// either end, in both orientations. Each chain is reported once, in the
/// direction whose block list is lexicographically smaller.
pub fn find_ladders(p: &Polyomino, min_steps: usize) -> Vec<Ladder> {
    let mut out = BTreeSet::new();
    for orientation in [Orientation::Horizontal, Orientation::Vertical] {
        let blocks: Vec<Block> = p
            .maximal_blocks(orientation)
            .into_iter()
            .filter(|b| b.len() >= 2)
            .collect();
        let ctx = LadderContext::new(p, orientation);
        let mut adj: BTreeMap<usize, Vec<(usize, [Point; 2])>> = BTreeMap::new();
        for i in 0..blocks.len() {
            for j in 0..blocks.len() {
                if i != j {
                    if let Some(c) = contact(&blocks[i], &blocks[j]) {
                        adj.entry(i).or_default().push((j, c));
                    }
                }
            }
        }
        let mut search = ChainSearch {
            adj: &adj,
            ctx: &ctx,
            chain: Vec::new(),
            contacts: Vec::new(),
            found: Vec::new(),
        };
        for start in 0..blocks.len() {
            search.chain = vec![start];
            search.contacts.clear();
            search.extend();
        }
        for (chain, contacts) in search.found {
            if chain.len() < min_steps.max(2) || !search_is_left_maximal(&adj, &ctx, &chain, &contacts) {
                continue;
            }
            let ladder = Ladder {
                orientation,
                blocks: chain.iter().map(|&k| blocks[k].clone()).collect(),
                contacts,
            };
            let rev = ladder.reversed();
            out.insert(if rev.blocks < ladder.blocks { rev } else { ladder });
        }
    }
    out.into_iter().collect()
}

struct ChainSearch<'a> {
    adj: &'a BTreeMap<usize, Vec<(usize, [Point; 2])>>,
    ctx: &'a LadderContext,
    chain: Vec<usize>,
    contacts: Vec<[Point; 2]>,
    found: Vec<(Vec<usize>, Vec<[Point; 2]>)>,
}

impl ChainSearch<'_> {
    /// Extends at the tail; records chains that cannot grow further there.
    fn extend(&mut self) {
        let last = *self.chain.last().expect("nonempty chain");
        let mut extended = false;
        for &(next, c) in self.adj.get(&last).map(Vec::as_slice).unwrap_or(&[]) {
            if self.chain.contains(&next) {
                continue;
            }
            if let Some(prev) = self.contacts.last() {
                if self.ctx.same_interval(prev, &c) {
                    continue;
                }
            }
            extended = true;
            self.chain.push(next);
            self.contacts.push(c);
            self.extend();
            self.chain.pop();
            self.contacts.pop();
        }
        if !extended {
            self.found.push((self.chain.clone(), self.contacts.clone()));
        }
    }
}

fn search_is_left_maximal(
    adj: &BTreeMap<usize, Vec<(usize, [Point; 2])>>,
    ctx: &LadderContext,
    chain: &[usize],
    contacts: &[[Point; 2]],
) -> bool {
    let first = chain[0];
    !adj.get(&first).map(Vec::as_slice).unwrap_or(&[]).iter().any(|&(prev, c)| {
        !chain.contains(&prev) && contacts.first().map_or(true, |next| !ctx.same_interval(&c, next))
    })
}

/// Whether `ladder` cannot be extended at either end inside `p`.
pub fn is_maximal_ladder(p: &Polyomino, ladder: &Ladder) -> bool {
    let candidates = find_ladders(p, 2);
    candidates.iter().any(|l| l == ladder || l.reversed() == *ladder)
}

pub fn has_block_of_length(p: &Polyomino, k: usize) -> bool {
    [Orientation::Horizontal, Orientation::Vertical]
        .into_iter()
        .any(|o| p.maximal_blocks(o).iter().any(|b| b.len() >= k))
}

/// Cells `A_1, …, A_n` of an open path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenPath {
    pub cells: Vec<Cell>,
}

impl OpenPath {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn first(&self) -> Cell {
        self.cells[0]
    }

    pub fn last(&self) -> Cell {
        self.cells[self.cells.len() - 1]
    }

    /// Checks the path conditions: at least two cells, consecutive cells
    /// share an edge, cells are distinct, and cells more than two steps
    /// apart share no vertex.
    pub fn validate(&self) -> bool {
        let c = &self.cells;
        let n = c.len();
        n >= 2
            && c.windows(2).all(|w| w[0].is_adjacent(&w[1]))
            && c.iter().collect::<BTreeSet<_>>().len() == n
            && (0..n).all(|i| (i + 3..n).all(|j| !c[i].touches(&c[j])))
    }

    /// Edges of the end cells not shared with their unique neighbour.
    pub fn free_edges(&self) -> (Vec<Edge>, Vec<Edge>) {
        let free = |end: &Cell, next: &Cell| -> Vec<Edge> {
            let shared = end.shared_edge(next);
            end.edges().into_iter().filter(|e| Some(*e) != shared).collect()
        };
        let n = self.cells.len();
        (
            free(&self.cells[0], &self.cells[1]),
            free(&self.cells[n - 1], &self.cells[n - 2]),
        )
    }

    pub fn polyomino(&self) -> Polyomino {
        Polyomino::new(self.cells.iter().copied()).expect("open path is connected")
    }
}

/// The ordering of an open path, starting from the smaller end cell.
pub fn open_path_certificate(p: &Polyomino) -> Option<OpenPath> {
    if p.rank() < 2 {
        return None;
    }
    let ends: Vec<Cell> = p.cells().iter().copied().filter(|c| p.neighbor_count(c) == 1).collect();
    if ends.len() != 2 || p.cells().iter().any(|c| p.neighbor_count(c) > 2) {
        return None;
    }
    let mut cells = vec![ends[0]];
    let mut prev: Option<Cell> = None;
    let mut cur = ends[0];
    while cur != ends[1] {
        let next = cur
            .neighbors()
            .into_iter()
            .find(|n| p.contains(n) && Some(*n) != prev)?;
        prev = Some(cur);
        cur = next;
        cells.push(cur);
    }
    let path = OpenPath { cells };
    (path.len() == p.rank() && path.validate()).then_some(path)
}

/// Three non-aligned cells. `cells[1]` is the corner cell; `cells[0]` and
/// `cells[2]` are the end cells carrying the hooking vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trimino {
    pub cells: [Cell; 3],
    pub hooking_vertices: [Point; 2],
    /// For each hooking vertex, the two edges of its end cell meeting there.
    pub hooking_edges: [[Edge; 2]; 2],
}

impl Trimino {
    pub fn polyomino(&self) -> Polyomino {
        Polyomino::new(self.cells).expect("trimino is connected")
    }

    pub fn is_hooking_edge(&self, k: usize, e: &Edge) -> bool {
        self.hooking_edges[k].contains(e)
    }
}

/// Recognizes an L-shaped trimino. The hooking vertex of an end cell is
/// its corner diagonally opposite the vertex shared by all three cells.
pub fn trimino_certificate(p: &Polyomino) -> Option<Trimino> {
    if p.rank() != 3 {
        return None;
    }
    let corner = *p.cells().iter().find(|c| p.neighbor_count(c) == 2)?;
    let ends: Vec<Cell> = p.cells().iter().copied().filter(|c| *c != corner).collect();
    let (e0, e1) = (ends[0], ends[1]);
    if e0.x == e1.x || e0.y == e1.y {
        return None;
    }
    let shared: Vec<Point> = corner
        .vertices()
        .into_iter()
        .filter(|v| e0.vertices().contains(v) && e1.vertices().contains(v))
        .collect();
    let [pivot] = shared.as_slice() else {
        return None;
    };
    let hook = |e: &Cell| -> (Point, [Edge; 2]) {
        let v = e
            .vertices()
            .into_iter()
            .find(|q| (q.x - pivot.x).abs() == 1 && (q.y - pivot.y).abs() == 1)
            .expect("end cell has a corner opposite the pivot");
        let edges: Vec<Edge> = e.edges().into_iter().filter(|ed| ed.contains(&v)).collect();
        (v, [edges[0], edges[1]])
    };
    let (a, ea) = hook(&e0);
    let (b, eb) = hook(&e1);
    Some(Trimino {
        cells: [e0, corner, e1],
        hooking_vertices: [a, b],
        hooking_edges: [ea, eb],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{frame3, ring22};

    #[test]
    fn closed_path_examples() {
        let cert = closed_path_certificate(&frame3()).unwrap();
        assert_eq!(cert.len(), 8);
        assert!(cert.validate_for(&frame3()));
        assert!(closed_path_certificate(&Polyomino::rectangle(Cell::new(0, 0), 2, 2).unwrap()).is_none());
        assert!(closed_path_certificate(&Polyomino::rectangle(Cell::new(0, 0), 2, 3).unwrap()).is_none());
        assert!(closed_path_certificate(&ring22()).is_some());
    }

    #[test]
    fn l_configuration_examples() {
        assert_eq!(find_l_configurations(&frame3()).len(), 4);
        assert!(find_l_configurations(&ring22()).is_empty());
        assert!(find_l_configurations(&Polyomino::rectangle(Cell::new(0, 0), 5, 1).unwrap()).is_empty());
        for l in find_l_configurations(&frame3()) {
            assert!(l.is_valid_in(&frame3()));
        }
    }

    #[test]
    fn ring22_ladder() {
        let ladders = find_ladders(&ring22(), 3);
        let want: Vec<Vec<Cell>> = vec![
            vec![Cell::new(0, 3), Cell::new(1, 3)],
            vec![Cell::new(1, 4), Cell::new(2, 4), Cell::new(3, 4)],
            vec![Cell::new(3, 5), Cell::new(4, 5), Cell::new(5, 5)],
        ];
        let hit = ladders.iter().find(|l| {
            let cells: Vec<Vec<Cell>> = l.blocks.iter().map(|b| b.cells.clone()).collect();
            cells == want || cells.iter().rev().cloned().collect::<Vec<_>>() == want
        });
        let l = hit.expect("RING22 has the three-step ladder");
        assert!(l.is_valid_in(&ring22()));
        assert!(l.contacts.contains(&[Point::new(1, 4), Point::new(2, 4)]));
        assert!(l.contacts.contains(&[Point::new(3, 5), Point::new(4, 5)]));
    }

    #[test]
    fn ladders_absent() {
        assert!(find_ladders(&frame3(), 3).is_empty());
        for n in 2..6 {
            assert!(find_ladders(&Polyomino::rectangle(Cell::new(0, 0), 2, n).unwrap(), 2).is_empty());
            assert!(find_ladders(&Polyomino::rectangle(Cell::new(0, 0), n, 2).unwrap(), 2).is_empty());
        }
    }

    #[test]
    fn block_lengths() {
        assert!(has_block_of_length(&frame3(), 3));
        assert!(!has_block_of_length(&Polyomino::from_coords(&[(0, 0), (1, 0)]).unwrap(), 3));
        assert!(has_block_of_length(&ring22(), 5));
    }

    #[test]
    fn open_paths() {
        let bar = Polyomino::rectangle(Cell::new(0, 0), 4, 1).unwrap();
        assert_eq!(open_path_certificate(&bar).unwrap().len(), 4);
        assert!(open_path_certificate(&frame3()).is_none());
        let stairs = Polyomino::from_coords(&[(0, 0), (1, 0), (1, 1), (2, 1)]).unwrap();
        let path = open_path_certificate(&stairs).unwrap();
        assert_eq!(path.cells, vec![Cell::new(0, 0), Cell::new(1, 0), Cell::new(1, 1), Cell::new(2, 1)]);
        let (f0, f1) = path.free_edges();
        assert_eq!((f0.len(), f1.len()), (3, 3));
        // A U-turn brings A_1 and A_4 into contact.
        let u = Polyomino::from_coords(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert!(open_path_certificate(&u).is_none());
    }

    #[test]
    fn trimino_hooking_vertices() {
        let t = trimino_certificate(&Polyomino::from_coords(&[(0, 0), (1, 0), (1, 1)]).unwrap()).unwrap();
        assert_eq!(t.cells[1], Cell::new(1, 0));
        assert_eq!(t.hooking_vertices, [Point::new(0, 0), Point::new(2, 2)]);
        assert!(t.is_hooking_edge(0, &Edge::new(Point::new(0, 0), Point::new(0, 1))));
        assert!(t.is_hooking_edge(1, &Edge::new(Point::new(1, 2), Point::new(2, 2))));
        assert!(trimino_certificate(&Polyomino::rectangle(Cell::new(0, 0), 3, 1).unwrap()).is_none());
        assert!(trimino_certificate(&Polyomino::rectangle(Cell::new(0, 0), 2, 2).unwrap()).is_none());
    }
}
