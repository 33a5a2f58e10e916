//! Sequential lattice embeddings of graphs: placements in `Z^d` whose edge
//! segments contain no interior lattice point.
//!
//! Geometry is exact and generic over the integer type through [`Coord`];
//! `i64`, `i128` and `BigInt` all work. Constructions whose coordinates grow
//! without bound, like the sequential planar pipeline, use `BigInt`.

pub mod embed;
pub mod error;
pub mod graph;
pub mod hyper;
pub mod lattice;
pub mod planar;
pub mod random;
pub mod scalar;

pub use error::{Error, Result};
pub use graph::{Coloring, Graph, VertexId};
pub use lattice::{LatticePoint, Placement};
pub use scalar::Coord;

/// Point with arbitrary-precision coordinates.
pub type BigPoint = LatticePoint<num_bigint::BigInt>;
pub type BigPlacement = Placement<num_bigint::BigInt>;
pub type IntPoint = LatticePoint<i64>;
pub type IntPlacement = Placement<i64>;
