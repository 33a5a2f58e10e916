//! Uniform hypergraphs, r-segment hypergraphs in the lattice plane, the
//! finite-plane hypergraphs `Z_k`, and strong and weak coloring.

mod chromatic;
mod hypergraph;
mod obstruction;
mod segment;
mod zk;

pub use chromatic::{
    is_strong_coloring, is_weak_coloring, strong_chromatic_number, two_section,
    weak_chromatic_number,
};
pub use hypergraph::{format_abstract, parse_abstract, Hypergraph};
pub use obstruction::realizability_obstruction_3uniform;
pub use segment::{
    format_geometric, parse_geometric, projection_color, projection_strong_coloring,
    sharp_construction, validate_segment_hypergraph, SegmentHypergraph, SegmentReport,
    SegmentViolation,
};
pub use zk::{build_zk, ZkHypergraph};
