//! Seeded generators for test corpora and the `gen` command.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Coloring, Graph, VertexId};
use crate::hyper::SegmentHypergraph;
use crate::lattice::{same_line, LatticePoint};
use crate::scalar::Coord;

/// Random graph whose vertices are split into four random parts; each
/// cross-part pair becomes an edge with probability `p`. Returns the graph
/// together with the part assignment as a proper coloring.
pub fn four_partite<R: Rng>(rng: &mut R, n: u64, p: f64) -> (Graph, Coloring) {
    let parts: Vec<usize> = (0..n).map(|_| rng.gen_range(0..4)).collect();
    let mut g = Graph::with_vertices(0..n);
    for u in 0..n {
        for v in u + 1..n {
            if parts[u as usize] != parts[v as usize] && rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    let coloring = Coloring::new(
        parts.iter().enumerate().map(|(v, &c)| (v as VertexId, c)).collect(),
        4,
    );
    (g, coloring)
}

/// Random maximal planar graph on `n >= 3` vertices: repeated face
/// subdivision followed by `n` attempted random edge flips.
pub fn maximal_planar<R: Rng>(rng: &mut R, n: u64) -> Graph {
    assert!(n >= 3, "maximal planar graphs need at least 3 vertices");
    let mut faces: Vec<[u64; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    let key = |a: u64, b: u64| (a.min(b), a.max(b));
    let mut edges: BTreeSet<(u64, u64)> = [(0, 1), (1, 2), (0, 2)].into_iter().collect();
    let mut degree = vec![2usize; n as usize];
    for v in 3..n {
        let f = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[f];
        faces[f] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
        for w in [a, b, c] {
            edges.insert(key(w, v));
            degree[w as usize] += 1;
        }
        degree[v as usize] = 3;
    }
    for _ in 0..n {
        let f1 = rng.gen_range(0..faces.len());
        let rot = rng.gen_range(0..3);
        let t = faces[f1];
        let (a, b, c) = (t[rot], t[(rot + 1) % 3], t[(rot + 2) % 3]);
        let Some(f2) = faces.iter().position(|f| {
            (0..3).any(|i| f[i] == b && f[(i + 1) % 3] == a)
        }) else {
            continue;
        };
        let s = faces[f2];
        let i = (0..3).find(|&i| s[i] == b).unwrap();
        let d = s[(i + 2) % 3];
        if c == d || edges.contains(&key(c, d)) || degree[a as usize] <= 3 || degree[b as usize] <= 3 {
            continue;
        }
        edges.remove(&key(a, b));
        edges.insert(key(c, d));
        degree[a as usize] -= 1;
        degree[b as usize] -= 1;
        degree[c as usize] += 1;
        degree[d as usize] += 1;
        faces[f1] = [c, a, d];
        faces[f2] = [d, b, c];
    }
    Graph::from_edges(edges).unwrap()
}

/// Random planar graph: a maximal planar graph with each edge kept with
/// probability `keep`.
pub fn planar<R: Rng>(rng: &mut R, n: u64, keep: f64) -> Graph {
    let full = maximal_planar(rng, n.max(3));
    let mut g = Graph::with_vertices(0..n);
    for (u, v) in full.edges() {
        if u < n && v < n && rng.gen_bool(keep) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Relabels vertices by a random permutation of `0..n`.
pub fn shuffle_labels<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let ids: Vec<VertexId> = g.vertices().collect();
    let mut perm = ids.clone();
    perm.shuffle(rng);
    let map = |v: VertexId| perm[ids.binary_search(&v).unwrap()];
    let mut h = Graph::with_vertices(perm.iter().copied());
    for (u, v) in g.edges() {
        h.add_edge(map(u), map(v)).unwrap();
    }
    h
}

/// Random valid `r`-segment hypergraph with up to `edges` edges whose start
/// points lie in `[-spread, spread]^2` and whose steps have coordinates in
/// `[-3, 3]`. Candidates on an already used line are dropped, so fewer
/// edges may come back.
pub fn segment_hypergraph<R: Rng, T: Coord>(
    rng: &mut R,
    r: usize,
    edges: usize,
    spread: i64,
) -> SegmentHypergraph<T> {
    assert!(r >= 2, "segment hypergraphs need r >= 2");
    let mut runs: Vec<Vec<LatticePoint<T>>> = Vec::new();
    for _ in 0..edges * 4 {
        if runs.len() == edges {
            break;
        }
        let (dx, dy) = loop {
            let d = (rng.gen_range(-3i64..=3), rng.gen_range(-3i64..=3));
            if num_integer::gcd(d.0, d.1) == 1 {
                break d;
            }
        };
        let (x0, y0) = (rng.gen_range(-spread..=spread), rng.gen_range(-spread..=spread));
        let run: Vec<LatticePoint<T>> = (0..r as i64)
            .map(|i| LatticePoint::xy(T::from_small(x0 + i * dx), T::from_small(y0 + i * dy)))
            .collect();
        let clash = runs
            .iter()
            .any(|e| same_line(&e[0], &e[1], &run[0], &run[1]).unwrap());
        if !clash {
            runs.push(run);
        }
    }
    SegmentHypergraph::new(r, runs)
}
