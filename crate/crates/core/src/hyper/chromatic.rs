use super::Hypergraph;
use crate::error::{Error, Result};
use crate::graph::{chromatic_number, Coloring, Graph};

/// Graph joining every two vertices that share an edge.
pub fn two_section(h: &Hypergraph) -> Graph {
    let mut g = Graph::with_vertices(h.vertices());
    for e in h.edges() {
        for (i, &u) in e.iter().enumerate() {
            for &v in &e[i + 1..] {
                g.add_edge(u, v).expect("distinct declared vertices");
            }
        }
    }
    g
}

/// No two vertices of a common edge share a color.
pub fn is_strong_coloring(h: &Hypergraph, c: &Coloring) -> Result<bool> {
    for v in h.vertices() {
        c.color(v).ok_or(Error::MissingColor(v))?;
    }
    Ok(h.edges().iter().all(|e| {
        let colors: std::collections::BTreeSet<_> = e.iter().map(|&v| c.color(v)).collect();
        colors.len() == e.len()
    }))
}

/// No edge is monochromatic.
pub fn is_weak_coloring(h: &Hypergraph, c: &Coloring) -> Result<bool> {
    for v in h.vertices() {
        c.color(v).ok_or(Error::MissingColor(v))?;
    }
    Ok(h
        .edges()
        .iter()
        .all(|e| e.iter().any(|&v| c.color(v) != c.color(e[0]))))
}

/// Strong chromatic number, computed as the chromatic number of the two-section.
pub fn strong_chromatic_number(h: &Hypergraph) -> usize {
    chromatic_number(&two_section(h))
}

/// Exact weak chromatic number by backtracking; errors if some edge has a
/// single vertex, since such an edge is monochromatic under every coloring.
pub fn weak_chromatic_number(h: &Hypergraph) -> Result<usize> {
    if let Some(i) = h.edges().iter().position(|e| e.len() == 1) {
        return Err(Error::SingletonEdge(i));
    }
    if h.vertex_count() == 0 {
        return Ok(0);
    }
    if h.edges().is_empty() {
        return Ok(1);
    }
    let ids: Vec<u64> = h.vertices().collect();
    let index = |v: u64| ids.binary_search(&v).unwrap();
    // closing[i]: edges whose last vertex (in id order) is vertex i
    let mut closing = vec![Vec::new(); ids.len()];
    for e in h.edges() {
        let members: Vec<usize> = e.iter().map(|&v| index(v)).collect();
        closing[*members.iter().max().unwrap()].push(members);
    }
    let mut k = 2;
    loop {
        let mut colors = vec![0usize; ids.len()];
        if weak_search(0, 0, k, &closing, &mut colors) {
            return Ok(k);
        }
        k += 1;
    }
}

fn weak_search(v: usize, used: usize, k: usize, closing: &[Vec<Vec<usize>>], colors: &mut [usize]) -> bool {
    if v == colors.len() {
        return true;
    }
    for c in 0..(used + 1).min(k) {
        colors[v] = c;
        let ok = closing[v]
            .iter()
            .all(|e| e.iter().any(|&w| colors[w] != c));
        if ok && weak_search(v + 1, used.max(c + 1), k, closing, colors) {
            return true;
        }
    }
    false
}
