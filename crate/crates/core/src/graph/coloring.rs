use std::collections::{BTreeMap, BTreeSet};

use super::{Graph, VertexId};
use crate::error::{Error, Result};

/// Assignment of a color in `0..k` to each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    assignment: BTreeMap<VertexId, usize>,
    k: usize,
}

impl Coloring {
    /// Creates a coloring; `k` is raised to cover the largest color used.
    pub fn new(assignment: BTreeMap<VertexId, usize>, k: usize) -> Self {
        let k = assignment.values().map(|c| c + 1).max().unwrap_or(0).max(k);
        Coloring { assignment, k }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VertexId, usize)>) -> Self {
        Self::new(pairs.into_iter().collect(), 0)
    }

    pub fn color(&self, v: VertexId) -> Option<usize> {
        self.assignment.get(&v).copied()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn assignment(&self) -> &BTreeMap<VertexId, usize> {
        &self.assignment
    }

    pub fn colors_used(&self) -> usize {
        self.assignment.values().collect::<BTreeSet<_>>().len()
    }

    /// Vertices of each color, ascending, indexed by color.
    pub fn classes(&self) -> Vec<Vec<VertexId>> {
        let mut out = vec![Vec::new(); self.k];
        for (&v, &c) in &self.assignment {
            out[c].push(v);
        }
        out
    }

    /// Errors if some vertex of `g` has no color.
    pub fn check_total(&self, g: &Graph) -> Result<()> {
        match g.vertices().find(|v| !self.assignment.contains_key(v)) {
            Some(v) => Err(Error::MissingColor(v)),
            None => Ok(()),
        }
    }
}

/// True iff every edge of `g` is bichromatic under `c`.
pub fn is_proper_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    c.check_total(g)?;
    Ok(g.edges().all(|(u, v)| c.color(u) != c.color(v)))
}

/// Greedy clique: grows a clique from every seed vertex, always adding the
/// highest-degree common neighbour, and keeps the largest one found.
pub fn greedy_clique(g: &Graph) -> Vec<VertexId> {
    let mut best: Vec<VertexId> = Vec::new();
    for seed in g.vertices() {
        let mut clique = vec![seed];
        let mut candidates: BTreeSet<VertexId> = g.neighbors(seed).collect();
        while let Some(&next) = candidates
            .iter()
            .max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v)))
        {
            clique.push(next);
            candidates.retain(|&w| w != next && g.has_edge(next, w));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

struct Search {
    order: Vec<usize>,
    // earlier[i]: positions (in `order`) of neighbours placed before position i
    earlier: Vec<Vec<usize>>,
    colors: Vec<usize>,
    k: usize,
}

impl Search {
    fn run(&mut self, pos: usize, used: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.earlier[pos].iter().any(|&p| self.colors[p] == c) {
                continue;
            }
            self.colors[pos] = c;
            if self.run(pos + 1, used.max(c + 1)) {
                return true;
            }
        }
        false
    }
}

/// Finds a proper coloring with at most `k` colors, if one exists.
///
/// Exact backtracking: vertices in descending degree order (ties by id),
/// colors ascending, and a new color is only opened when all smaller ones
/// are in use. The result is deterministic.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(Coloring::new(BTreeMap::new(), k));
    }
    if k == 0 || greedy_clique(g).len() > k {
        return None;
    }
    let (ids, adj) = g.indexed();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(adj[i].len()), i));
    let mut position = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    let earlier = order
        .iter()
        .enumerate()
        .map(|(p, &v)| {
            adj[v]
                .iter()
                .map(|&w| position[w])
                .filter(|&q| q < p)
                .collect()
        })
        .collect();
    let mut search = Search {
        order,
        earlier,
        colors: vec![0; n],
        k,
    };
    if !search.run(0, 0) {
        return None;
    }
    let assignment = search
        .order
        .iter()
        .zip(&search.colors)
        .map(|(&v, &c)| (ids[v], c))
        .collect();
    Some(Coloring::new(assignment, k))
}

/// Exact chromatic number; `0` for the graph with no vertices.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.vertex_count() == 0 {
        return 0;
    }
    let mut k = greedy_clique(g).len().max(1);
    while k_coloring(g, k).is_none() {
        k += 1;
    }
    k
}

/// Every proper coloring with at most `k` colors, up to renaming colors.
///
/// Colors are canonical: walking vertices by ascending id, each new color is
/// the smallest unused one.
pub fn enumerate_colorings(g: &Graph, k: usize) -> Vec<Coloring> {
    let (ids, adj) = g.indexed();
    let n = ids.len();
    let mut colors = vec![usize::MAX; n];
    let mut out = Vec::new();
    fn rec(
        v: usize,
        used: usize,
        k: usize,
        adj: &[Vec<usize>],
        colors: &mut Vec<usize>,
        ids: &[VertexId],
        out: &mut Vec<Coloring>,
    ) {
        if v == adj.len() {
            let assignment = ids.iter().copied().zip(colors.iter().copied()).collect();
            out.push(Coloring::new(assignment, k));
            return;
        }
        for c in 0..(used + 1).min(k) {
            if adj[v].iter().any(|&w| w < v && colors[w] == c) {
                continue;
            }
            colors[v] = c;
            rec(v + 1, used.max(c + 1), k, adj, colors, ids, out);
        }
        colors[v] = usize::MAX;
    }
    rec(0, 0, k, &adj, &mut colors, &ids, &mut out);
    out
}
