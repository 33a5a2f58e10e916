use std::fmt::Write;

use super::{Graph, VertexId};
use crate::error::{Error, Result};

fn parse_id(tok: &str, line: usize) -> Result<VertexId> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid vertex id `{tok}`"),
    })
}

/// Parses the edge-list format: `u v` per edge, a lone `v` declares an
/// isolated vertex, `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut g = Graph::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            [v] => g.add_vertex(parse_id(v, line)?),
            [u, v] => {
                let (u, v) = (parse_id(u, line)?, parse_id(v, line)?);
                if u == v {
                    return Err(Error::Parse {
                        line,
                        message: format!("self-loop at vertex {u}"),
                    });
                }
                g.add_vertex(u);
                g.add_vertex(v);
                g.add_edge(u, v)?;
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected one or two vertex ids, found {}", toks.len()),
                })
            }
        }
    }
    Ok(g)
}

/// Writes edges in lexicographic order, then isolated vertices.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        writeln!(out, "{v}").unwrap();
    }
    out
}
