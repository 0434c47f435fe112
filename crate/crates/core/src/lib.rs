//! Primality of polyomino ideals: grid geometry, shape classification,
//! zig-zag walks, toric certificates and the closed-path families.

pub mod classify;
pub mod error;
pub mod families;
pub mod format;
pub mod grid;
pub mod ideals;
pub mod shapes;
pub mod symmetry;
pub mod toric;
pub mod zigzag;

pub use error::{FamilyError, GridError, IdealError, ParseError, ToricError};
pub use format::Format;
pub use grid::{Block, Cell, Edge, EdgeInterval, LatticeInterval, Orientation, Point, Polyomino};
pub use symmetry::Symmetry;
