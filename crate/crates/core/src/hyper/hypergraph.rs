use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::VertexId;

/// Hypergraph whose edges are sorted, distinct vertex sets.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    vertices: BTreeSet<VertexId>,
    edges: Vec<Vec<VertexId>>,
}

impl Hypergraph {
    /// Errors if an edge mentions an undeclared vertex. Duplicate vertices
    /// inside an edge and duplicate edges collapse.
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = Vec<VertexId>>,
    ) -> Result<Self> {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for e in edges {
            let e: BTreeSet<VertexId> = e.into_iter().collect();
            if let Some(v) = e.iter().find(|v| !vertices.contains(v)) {
                return Err(Error::UnknownVertex(*v));
            }
            set.insert(e.into_iter().collect::<Vec<_>>());
        }
        Ok(Hypergraph {
            vertices,
            edges: set.into_iter().collect(),
        })
    }

    /// Vertices are the union of the edges.
    pub fn from_edges(edges: impl IntoIterator<Item = Vec<VertexId>>) -> Self {
        let edges: Vec<Vec<VertexId>> = edges.into_iter().collect();
        let vertices: Vec<VertexId> = edges.iter().flatten().copied().collect();
        Self::new(vertices, edges).expect("all edge members declared")
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Vec<VertexId>] {
        &self.edges
    }

    /// Common edge size, or `None` when edges differ in size or there are none.
    pub fn uniformity(&self) -> Option<usize> {
        let r = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == r).then_some(r)
    }
}

/// One edge per line as whitespace-separated vertex ids; `#` comments.
pub fn parse_abstract(text: &str) -> Result<Hypergraph> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let ids = content
            .split_whitespace()
            .map(|t| {
                t.parse::<VertexId>().map_err(|_| Error::Parse {
                    line: i + 1,
                    message: format!("invalid vertex id `{t}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if !ids.is_empty() {
            edges.push(ids);
        }
    }
    Ok(Hypergraph::from_edges(edges))
}

pub fn format_abstract(h: &Hypergraph) -> String {
    let mut out = String::new();
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(u64::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}
