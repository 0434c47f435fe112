//! Zig-zag walks: exhaustive search and independent verification.
//!
//! A walk is a cyclic sequence of distinct inner intervals `I_1, …, I_ℓ`.
//! In each `I_i` the corners `v_i, z_i` form one diagonal pair and
//! `u_i, v_{i+1}` the other; consecutive intervals meet exactly in
//! `v_{i+1}`, `v_i` and `v_{i+1}` share a maximal edge interval, and no
//! inner interval contains two distinct `z` corners.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::grid::{LatticeInterval, Orientation, Point, Polyomino};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZigZagWalk {
    pub intervals: Vec<LatticeInterval>,
    /// `v_1, …, v_{ℓ+1}` with `v_{ℓ+1} = v_1`.
    pub v: Vec<Point>,
    pub z: Vec<Point>,
    pub u: Vec<Point>,
}

impl ZigZagWalk {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// Opposite corner of `p` in `iv`.
fn opposite(iv: &LatticeInterval, p: &Point) -> Point {
    Point::new(iv.a.x + iv.b.x - p.x, iv.a.y + iv.b.y - p.y)
}

/// The two corners of `iv` adjacent to corner `p`.
fn adjacent_corners(iv: &LatticeInterval, p: &Point) -> [Point; 2] {
    let q = opposite(iv, p);
    [Point::new(q.x, p.y), Point::new(p.x, q.y)]
}

fn is_corner(iv: &LatticeInterval, p: &Point) -> bool {
    iv.corners().contains(p)
}

fn meets_in(a: &LatticeInterval, b: &LatticeInterval, p: &Point) -> bool {
    a.intersection(b).is_some_and(|i| i.a == *p && i.b == *p)
}

fn on_common_edge_interval(p: &Polyomino, s: &Point, t: &Point) -> bool {
    [Orientation::Horizontal, Orientation::Vertical].into_iter().any(|o| {
        p.maximal_edge_intervals(o)
            .iter()
            .any(|iv| iv.contains_point(s) && iv.contains_point(t))
    })
}

/// Brute-force condition (3): does some inner interval contain both
/// points?
pub fn co_contained_naive(inner: &[LatticeInterval], s: &Point, t: &Point) -> bool {
    inner.iter().any(|j| j.contains_point(s) && j.contains_point(t))
}

/// Checks every defining condition of a zig-zag walk against `p`, scanning
/// the full inner-interval list for condition (3).
pub fn verify_zigzag(p: &Polyomino, w: &ZigZagWalk) -> bool {
    let l = w.intervals.len();
    if l < 2 || w.v.len() != l + 1 || w.z.len() != l || w.u.len() != l || w.v[l] != w.v[0] {
        return false;
    }
    let inner = p.inner_intervals();
    for (i, iv) in w.intervals.iter().enumerate() {
        if !p.is_inner_interval(iv) || w.intervals[..i].contains(iv) {
            return false;
        }
        let (vi, zi, ui, vn) = (w.v[i], w.z[i], w.u[i], w.v[i + 1]);
        if ![vi, zi, ui, vn].iter().all(|c| is_corner(iv, c))
            || opposite(iv, &vi) != zi
            || opposite(iv, &ui) != vn
            || vi == vn
            || vi == ui
        {
            return false;
        }
        let next = &w.intervals[(i + 1) % l];
        if !meets_in(iv, next, &vn) {
            return false;
        }
        if !on_common_edge_interval(p, &vi, &vn) {
            return false;
        }
    }
    for i in 0..l {
        for j in 0..l {
            if i != j && co_contained_naive(&inner, &w.z[i], &w.z[j]) {
                return false;
            }
        }
    }
    true
}

/// For every vertex, the set of inner intervals containing it, as a
/// bitset over the inner-interval list.
struct ContainmentIndex {
    words: usize,
    bits: BTreeMap<Point, Vec<u64>>,
}

impl ContainmentIndex {
    fn new(p: &Polyomino, inner: &[LatticeInterval]) -> Self {
        let words = inner.len().div_ceil(64).max(1);
        let mut bits: BTreeMap<Point, Vec<u64>> = BTreeMap::new();
        for v in p.vertices() {
            let mut set = vec![0u64; words];
            for (k, iv) in inner.iter().enumerate() {
                if iv.contains_point(&v) {
                    set[k / 64] |= 1 << (k % 64);
                }
            }
            bits.insert(v, set);
        }
        ContainmentIndex { words, bits }
    }

    fn co_contained(&self, s: &Point, t: &Point) -> bool {
        let (a, b) = (&self.bits[s], &self.bits[t]);
        (0..self.words).any(|k| a[k] & b[k] != 0)
    }
}

struct Step {
    interval: usize,
    v: Point,
    z: Point,
    u: Point,
    next_v: Point,
}

struct Search<'a> {
    inner: &'a [LatticeInterval],
    by_corner: BTreeMap<Point, Vec<usize>>,
    index: ContainmentIndex,
    used: Vec<bool>,
    steps: Vec<Step>,
    anchor: usize,
}

impl Search<'_> {
    fn z_ok(&self, z: &Point) -> bool {
        self.steps.iter().all(|s| !self.index.co_contained(&s.z, z))
    }

    fn closes(&self) -> bool {
        let first = &self.steps[0];
        let last = self.steps.last().expect("nonempty");
        self.steps.len() >= 3
            && last.next_v == first.v
            && meets_in(&self.inner[last.interval], &self.inner[first.interval], &first.v)
    }

    fn run(&mut self) -> bool {
        if self.closes() {
            return true;
        }
        let last = self.steps.last().expect("nonempty");
        let (cur_iv, v) = (self.inner[last.interval], last.next_v);
        let candidates = self.by_corner.get(&v).cloned().unwrap_or_default();
        for k in candidates {
            if k <= self.anchor || self.used[k] {
                continue;
            }
            let iv = self.inner[k];
            if !meets_in(&cur_iv, &iv, &v) {
                continue;
            }
            let z = opposite(&iv, &v);
            if !self.z_ok(&z) {
                continue;
            }
            for next_v in adjacent_corners(&iv, &v) {
                let u = opposite(&iv, &next_v);
                self.used[k] = true;
                self.steps.push(Step {
                    interval: k,
                    v,
                    z,
                    u,
                    next_v,
                });
                if self.run() {
                    return true;
                }
                self.steps.pop();
                self.used[k] = false;
            }
        }
        false
    }

    fn walk(&self) -> ZigZagWalk {
        let mut v: Vec<Point> = self.steps.iter().map(|s| s.v).collect();
        v.push(self.steps[0].v);
        ZigZagWalk {
            intervals: self.steps.iter().map(|s| self.inner[s.interval]).collect(),
            v,
            z: self.steps.iter().map(|s| s.z).collect(),
            u: self.steps.iter().map(|s| s.u).collect(),
        }
    }
}

/// Finds a zig-zag walk of `p`, or proves none exists by exhaustive
/// backtracking. The first interval of a reported walk is the least one in
/// the walk.
pub fn find_zigzag_walk(p: &Polyomino) -> Option<ZigZagWalk> {
    let inner = p.inner_intervals();
    let mut by_corner: BTreeMap<Point, Vec<usize>> = BTreeMap::new();
    for (k, iv) in inner.iter().enumerate() {
        for c in iv.corners() {
            by_corner.entry(c).or_default().push(k);
        }
    }
    let mut search = Search {
        inner: &inner,
        by_corner,
        index: ContainmentIndex::new(p, &inner),
        used: vec![false; inner.len()],
        steps: Vec::new(),
        anchor: 0,
    };
    for k in 0..inner.len() {
        search.anchor = k;
        let iv = inner[k];
        for v in iv.corners() {
            for next_v in adjacent_corners(&iv, &v) {
                search.used[k] = true;
                search.steps.push(Step {
                    interval: k,
                    v,
                    z: opposite(&iv, &v),
                    u: opposite(&iv, &next_v),
                    next_v,
                });
                if search.run() {
                    return Some(search.walk());
                }
                search.steps.pop();
                search.used[k] = false;
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{frame3, ring22};

    #[test]
    fn no_walks_on_the_reference_shapes() {
        assert!(find_zigzag_walk(&frame3()).is_none());
        assert!(find_zigzag_walk(&ring22()).is_none());
    }

    #[test]
    fn index_agrees_with_naive_scan() {
        let p = ring22();
        let inner = p.inner_intervals();
        let index = ContainmentIndex::new(&p, &inner);
        let verts: Vec<Point> = p.vertices().into_iter().collect();
        for s in &verts {
            for t in &verts {
                assert_eq!(index.co_contained(s, t), co_contained_naive(&inner, s, t));
            }
        }
    }

    #[test]
    fn corner_helpers() {
        let iv = LatticeInterval::new(Point::new(0, 0), Point::new(2, 1)).unwrap();
        assert_eq!(opposite(&iv, &Point::new(0, 1)), Point::new(2, 0));
        let adj = adjacent_corners(&iv, &Point::new(0, 0));
        assert!(adj.contains(&Point::new(2, 0)) && adj.contains(&Point::new(0, 1)));
    }
}
