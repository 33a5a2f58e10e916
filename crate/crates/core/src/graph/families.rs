//! Named graphs used throughout the tests and the command-line tool.

use super::{Graph, VertexId};

fn build(n: u64, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Graph {
    let mut g = Graph::with_vertices(0..n);
    for (u, v) in edges {
        g.add_edge(u, v).expect("valid edge");
    }
    g
}

pub fn complete(n: u64) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn path(n: u64) -> Graph {
    build(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: u64) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    build(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: u64, b: u64) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    build(10, outer.chain(inner).chain(spokes))
}

/// `K6` minus the perfect matching `{0,1}, {2,3}, {4,5}`.
pub fn octahedron() -> Graph {
    let pairs = [(0, 1), (2, 3), (4, 5)];
    build(
        6,
        (0..6u64)
            .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
            .filter(|e| !pairs.contains(e)),
    )
}

/// Icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
pub fn icosahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let up = 1 + i;
        let up_next = 1 + (i + 1) % 5;
        let low = 6 + i;
        let low_next = 6 + (i + 1) % 5;
        edges.extend([(0, up), (up, up_next), (low, low_next), (low, 11)]);
        edges.extend([(up, low), (up, low_next)]);
    }
    build(12, edges)
}

/// `w × h` grid graph; vertex `(i, j)` has id `j * w + i`.
pub fn grid(w: u64, h: u64) -> Graph {
    let mut edges = Vec::new();
    for j in 0..h {
        for i in 0..w {
            let v = j * w + i;
            if i + 1 < w {
                edges.push((v, v + 1));
            }
            if j + 1 < h {
                edges.push((v, v + w));
            }
        }
    }
    build(w * h, edges)
}
