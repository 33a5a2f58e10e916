//! Planarity testing and straight-line grid drawings.

mod drawing;
mod embedding;
mod rotation;

pub use drawing::{straight_line_grid_drawing, GridDrawing};
pub use embedding::{planarity_embedding, CombinatorialEmbedding};
