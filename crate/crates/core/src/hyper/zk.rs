use std::collections::BTreeSet;

use super::Hypergraph;
use crate::error::{Error, Result};
use crate::graph::VertexId;

/// Lines of size exactly `k` in `Z_k x Z_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZkHypergraph {
    pub k: u64,
    /// Each edge sorted; edges sorted.
    pub edges: Vec<Vec<(u64, u64)>>,
}

impl ZkHypergraph {
    pub fn vertex_id(&self, (x, y): (u64, u64)) -> VertexId {
        x * self.k + y
    }

    pub fn contains_edge(&self, points: &[(u64, u64)]) -> bool {
        let mut e = points.to_vec();
        e.sort();
        self.edges.binary_search(&e).is_ok()
    }

    /// Abstract form with vertex `(x, y)` as id `x * k + y`.
    pub fn to_hypergraph(&self) -> Hypergraph {
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&p| self.vertex_id(p)).collect());
        Hypergraph::new(0..self.k * self.k, edges).expect("ids in range")
    }
}

/// All cosets `u + Z_k v`, kept when they have exactly `k` points.
pub fn build_zk(k: u64) -> Result<ZkHypergraph> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("Z_k needs k >= 2, got {k}")));
    }
    let mut edges = BTreeSet::new();
    for ux in 0..k {
        for uy in 0..k {
            for vx in 0..k {
                for vy in 0..k {
                    let coset: BTreeSet<(u64, u64)> = (0..k)
                        .map(|t| ((ux + t * vx) % k, (uy + t * vy) % k))
                        .collect();
                    if coset.len() as u64 == k {
                        edges.insert(coset.into_iter().collect::<Vec<_>>());
                    }
                }
            }
        }
    }
    Ok(ZkHypergraph {
        k,
        edges: edges.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_k() {
        assert_eq!(build_zk(2).unwrap().edges.len(), 6);
        let z3 = build_zk(3).unwrap();
        // affine plane of order 3: 3 * 4 lines
        assert_eq!(z3.edges.len(), 12);
        assert!(z3.contains_edge(&[(2, 1), (0, 0), (1, 2)]));
        assert!(build_zk(1).is_err());
        for k in 2..=6 {
            let z = build_zk(k).unwrap();
            assert!(z.edges.iter().all(|e| e.len() as u64 == k));
            assert_eq!(z.to_hypergraph().vertex_count() as u64, k * k);
        }
    }

    #[test]
    fn prime_k_matches_affine_plane() {
        for k in [2u64, 3, 5, 7] {
            assert_eq!(build_zk(k).unwrap().edges.len() as u64, k * (k + 1));
        }
    }
}
