pub mod belts;
pub mod document;
pub mod error;
pub mod exact;
pub mod harness;
pub mod lattice;
pub mod planar;
pub mod polytope;
pub mod tiling;
pub mod zonotope;

pub use error::{GeomError, Result};
