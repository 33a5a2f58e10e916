//! Sequential embeddings: the four-class plane construction, its lift to
//! dimension `d`, the parity coloring that inverts it, and the pipeline
//! producing sequential *planar* embeddings of planar graphs.

mod classes;
mod planar_seq;

pub use classes::{
    compute_d, embed_4colorable, embed_d, embed_in_dimension, embed_in_plane, parity_coloring,
    plane_class_point, PLANAR_X_OFFSETS,
};
pub use planar_seq::{sequential_planar_embed, sequential_planar_embed_detailed, PlanarSequentialRun};
