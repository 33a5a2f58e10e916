use super::Hypergraph;
use crate::error::{Error, Result};

/// Detects the intersection pattern that rules out realizing a 3-uniform
/// hypergraph as a 3-segment hypergraph: at least four edges, every two
/// edges meet, and no vertex lies in three or more edges.
pub fn realizability_obstruction_3uniform(h: &Hypergraph) -> Result<bool> {
    if let Some(e) = h.edges().iter().find(|e| e.len() != 3) {
        return Err(Error::NotUniform {
            expected: 3,
            found: e.len(),
        });
    }
    let edges = h.edges();
    if edges.len() < 4 {
        return Ok(false);
    }
    let pairwise = edges.iter().enumerate().all(|(i, a)| {
        edges[i + 1..]
            .iter()
            .all(|b| a.iter().any(|v| b.contains(v)))
    });
    let no_triple = h
        .vertices()
        .all(|v| edges.iter().filter(|e| e.contains(&v)).count() < 3);
    Ok(pairwise && no_triple)
}
