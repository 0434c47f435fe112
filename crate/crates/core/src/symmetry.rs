//! The eight symmetries of the square lattice fixing the origin.

use serde::{Deserialize, Serialize};

use crate::grid::{Block, Cell, EdgeInterval, LatticeInterval, Orientation, Point};

/// A signed permutation matrix `[[a, b], [c, d]]` acting on column vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Symmetry {
    a: i32,
    b: i32,
    c: i32,
    d: i32,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry { a: 1, b: 0, c: 0, d: 1 };
    pub const ROT90: Symmetry = Symmetry { a: 0, b: -1, c: 1, d: 0 };
    pub const ROT180: Symmetry = Symmetry { a: -1, b: 0, c: 0, d: -1 };
    pub const ROT270: Symmetry = Symmetry { a: 0, b: 1, c: -1, d: 0 };
    pub const FLIP_X: Symmetry = Symmetry { a: -1, b: 0, c: 0, d: 1 };
    pub const FLIP_Y: Symmetry = Symmetry { a: 1, b: 0, c: 0, d: -1 };
    pub const TRANSPOSE: Symmetry = Symmetry { a: 0, b: 1, c: 1, d: 0 };
    pub const ANTI_TRANSPOSE: Symmetry = Symmetry { a: 0, b: -1, c: -1, d: 0 };

    pub const ALL: [Symmetry; 8] = [
        Symmetry::IDENTITY,
        Symmetry::ROT90,
        Symmetry::ROT180,
        Symmetry::ROT270,
        Symmetry::FLIP_X,
        Symmetry::FLIP_Y,
        Symmetry::TRANSPOSE,
        Symmetry::ANTI_TRANSPOSE,
    ];

    pub fn apply_point(&self, p: &Point) -> Point {
        Point::new(self.a * p.x + self.b * p.y, self.c * p.x + self.d * p.y)
    }

    /// Maps the cell through its centre `(2x+1, 2y+1) / 2`.
    pub fn apply_cell(&self, c: &Cell) -> Cell {
        let (cx, cy) = (2 * c.x + 1, 2 * c.y + 1);
        let (nx, ny) = (self.a * cx + self.b * cy, self.c * cx + self.d * cy);
        Cell::new((nx - 1).div_euclid(2), (ny - 1).div_euclid(2))
    }

    pub fn apply_interval(&self, iv: &LatticeInterval) -> LatticeInterval {
        let p = self.apply_point(&iv.a);
        let q = self.apply_point(&iv.b);
        LatticeInterval {
            a: Point::new(p.x.min(q.x), p.y.min(q.y)),
            b: Point::new(p.x.max(q.x), p.y.max(q.y)),
        }
    }

    pub fn swaps_axes(&self) -> bool {
        self.b != 0
    }

    pub fn apply_orientation(&self, o: Orientation) -> Orientation {
        if self.swaps_axes() {
            o.other()
        } else {
            o
        }
    }

    pub fn apply_edge_interval(&self, iv: &EdgeInterval) -> EdgeInterval {
        let [p, q] = iv.endpoints();
        let (p, q) = (self.apply_point(&p), self.apply_point(&q));
        let orientation = self.apply_orientation(iv.orientation);
        match orientation {
            Orientation::Horizontal => EdgeInterval {
                orientation,
                line: p.y,
                lo: p.x.min(q.x),
                hi: p.x.max(q.x),
            },
            Orientation::Vertical => EdgeInterval {
                orientation,
                line: p.x,
                lo: p.y.min(q.y),
                hi: p.y.max(q.y),
            },
        }
    }

    /// Image block, cells kept in the image of the original order.
    pub fn apply_block(&self, b: &Block) -> Block {
        Block {
            orientation: self.apply_orientation(b.orientation),
            cells: b.cells.iter().map(|c| self.apply_cell(c)).collect(),
        }
    }

    pub fn compose(&self, other: &Symmetry) -> Symmetry {
        // self ∘ other
        Symmetry {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    pub fn inverse(&self) -> Symmetry {
        // Orthogonal matrix: inverse is the transpose.
        Symmetry {
            a: self.a,
            b: self.c,
            c: self.b,
            d: self.d,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_laws() {
        for s in Symmetry::ALL {
            assert_eq!(s.compose(&s.inverse()), Symmetry::IDENTITY);
            for t in Symmetry::ALL {
                assert!(Symmetry::ALL.contains(&s.compose(&t)));
            }
        }
    }

    #[test]
    fn cell_image_matches_vertex_image() {
        let c = Cell::new(3, -2);
        for s in Symmetry::ALL {
            let img = s.apply_cell(&c);
            let mut from_vertices: Vec<Point> = c.vertices().iter().map(|p| s.apply_point(p)).collect();
            from_vertices.sort();
            let mut direct: Vec<Point> = img.vertices().to_vec();
            direct.sort();
            assert_eq!(from_vertices, direct);
        }
    }
}
