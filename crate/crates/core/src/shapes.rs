//! Named example shapes.

use crate::classify::OpenPath;
use crate::families::{PscParts, RectangleParts};
use crate::grid::{Cell, Polyomino};

/// The 3×3 frame: eight cells around an empty centre.
pub fn frame3() -> Polyomino {
    Polyomino::from_coords(&[(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (1, 2), (0, 2), (0, 1)])
        .expect("frame is a polyomino")
}

/// A 22-cell closed path with no L-configuration whose only obstruction
/// to zig-zag walks is a three-step ladder.
pub fn ring22() -> Polyomino {
    Polyomino::from_coords(&[
        (1, 0),
        (2, 0),
        (3, 0),
        (4, 0),
        (5, 0),
        (0, 1),
        (1, 1),
        (5, 1),
        (6, 1),
        (0, 2),
        (6, 2),
        (0, 3),
        (1, 3),
        (6, 3),
        (1, 4),
        (2, 4),
        (3, 4),
        (5, 4),
        (6, 4),
        (3, 5),
        (4, 5),
        (5, 5),
    ])
    .expect("ring is a polyomino")
}

/// The smallest closed path with a zig-zag walk: a 16-cell diamond ring.
pub fn diamond16() -> Polyomino {
    Polyomino::from_coords(&[
        (1, 0),
        (2, 0),
        (3, 0),
        (0, 1),
        (1, 1),
        (3, 1),
        (4, 1),
        (0, 2),
        (4, 2),
        (0, 3),
        (1, 3),
        (3, 3),
        (4, 3),
        (1, 4),
        (2, 4),
        (3, 4),
    ])
    .expect("ring is a polyomino")
}

/// Looks up a shape by name (`frame3`, `ring22`, `diamond16`).
pub fn by_name(name: &str) -> Option<Polyomino> {
    match name {
        "frame3" => Some(frame3()),
        "ring22" => Some(ring22()),
        "diamond16" => Some(diamond16()),
        _ => None,
    }
}

fn poly(coords: &[(i32, i32)]) -> Polyomino {
    Polyomino::from_coords(coords).expect("example part is a polyomino")
}

fn path(coords: &[(i32, i32)]) -> OpenPath {
    OpenPath {
        cells: coords.iter().map(|&c| Cell::from(c)).collect(),
    }
}

/// `P(S, C)` with `S` a row of seven cells and two triminoes. With
/// `l_shaped` the path `C` bends into an arch holding two
/// L-configurations; otherwise it is a straight run of three cells.
pub fn psc_example(l_shaped: bool) -> PscParts {
    let c = if l_shaped {
        path(&[(2, 2), (2, 3), (2, 4), (3, 4), (4, 4), (4, 3), (4, 2)])
    } else {
        path(&[(2, 2), (3, 2), (4, 2)])
    };
    PscParts {
        s: poly(&[(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (5, 0), (6, 0)]),
        c,
        t1: poly(&[(0, 1), (0, 2), (1, 2)]),
        t2: poly(&[(6, 1), (6, 2), (5, 2)]),
    }
}

/// A good L-rectangle on `R = [(1,1),(4,2)]`.
pub fn l_rectangle_small() -> RectangleParts {
    RectangleParts {
        r: poly(&[(1, 1), (2, 1), (3, 1)]),
        p1: path(&[(1, 2), (1, 3)]),
        s: poly(&[(1, 4), (2, 4), (3, 4)]),
        p2: path(&[(3, 3), (3, 2)]),
    }
}

/// A good L-rectangle on `R = [(1,1),(5,3)]`.
pub fn l_rectangle_example() -> RectangleParts {
    RectangleParts {
        r: Polyomino::rectangle(Cell::new(1, 1), 4, 2).expect("rectangle"),
        p1: path(&[(1, 3), (1, 4), (1, 5)]),
        s: poly(&[(1, 6), (2, 6), (3, 6), (4, 6)]),
        p2: path(&[(4, 5), (4, 4), (4, 3)]),
    }
}

/// An L-rectangle that is not good: `S` stretches the edge interval
/// through `(1, 2)` past a missing cell.
pub fn l_rectangle_not_good() -> RectangleParts {
    RectangleParts {
        r: poly(&[(1, 1), (2, 1), (3, 1)]),
        p1: path(&[(1, 2), (1, 3)]),
        s: poly(&[(1, 4), (1, 5), (0, 5), (0, 6), (2, 5), (2, 6), (2, 7)]),
        p2: path(&[(3, 5), (3, 4), (3, 3), (3, 2)]),
    }
}

/// A rectangle linked by two paths where `P_2` meets the left side of `R`.
pub fn rectangle_linked_left() -> RectangleParts {
    RectangleParts {
        r: Polyomino::rectangle(Cell::new(1, 1), 4, 2).expect("rectangle"),
        p1: path(&[(1, 3), (1, 4), (1, 5)]),
        s: poly(&[(-1, 6), (0, 6), (1, 6), (2, 6)]),
        p2: path(&[(-1, 5), (-1, 4), (-1, 3), (-1, 2), (-1, 1), (0, 1)]),
    }
}

/// A ladder-rectangle on `R = [(1,1),(4,2)]` with `s = 2`.
pub fn ladder_rectangle_example() -> RectangleParts {
    RectangleParts {
        r: poly(&[(1, 1), (2, 1), (3, 1)]),
        p1: path(&[(1, 2), (0, 2), (0, 3), (-1, 3), (-1, 4)]),
        s: poly(&[(-1, 5), (0, 5), (1, 5), (2, 5), (3, 5)]),
        p2: path(&[(3, 4), (3, 3), (3, 2)]),
    }
}
