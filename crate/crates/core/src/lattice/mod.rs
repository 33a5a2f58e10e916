//! Exact lattice geometry: points and placements, the gcd visibility
//! criterion, segment predicates and the embedding verifier.

mod point;
mod predicates;
mod verify;

pub use point::{format_placement, parse_placement, LatticePoint, Placement};
pub use predicates::{
    interior_lattice_count, is_sequential_segment, orientation, same_line, segments_cross,
};
pub use verify::{verify_embedding, Checks, VerificationReport, Violation};
