use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fmt::Write;

use super::Hypergraph;
use crate::error::{Error, Result};
use crate::graph::{Coloring, VertexId};
use crate::lattice::{orientation, same_line, LatticePoint};
use crate::scalar::Coord;

/// Uniform hypergraph whose edges are runs of `r` lattice points in the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentHypergraph<T> {
    pub r: usize,
    pub edges: Vec<Vec<LatticePoint<T>>>,
}

impl<T: Coord> SegmentHypergraph<T> {
    pub fn new(r: usize, edges: Vec<Vec<LatticePoint<T>>>) -> Self {
        SegmentHypergraph { r, edges }
    }

    /// Distinct points of all edges in lexicographic order.
    pub fn points(&self) -> Vec<LatticePoint<T>> {
        let set: BTreeSet<&LatticePoint<T>> = self.edges.iter().flatten().collect();
        set.into_iter().cloned().collect()
    }

    /// Abstract hypergraph on the union of points; vertex `i` is `points[i]`.
    pub fn to_abstract(&self) -> (Hypergraph, Vec<LatticePoint<T>>) {
        let points = self.points();
        let id = |p: &LatticePoint<T>| points.binary_search(p).unwrap() as VertexId;
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(id).collect::<Vec<_>>());
        let h = Hypergraph::new(0..points.len() as VertexId, edges).expect("ids in range");
        (h, points)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegmentViolation {
    /// Uniformity below 2.
    BadUniformity(usize),
    WrongSize { edge: usize, size: usize },
    /// Some point is not two-dimensional.
    NotPlanar { edge: usize },
    /// Points are not equally spaced by a primitive step.
    NotConsecutive { edge: usize },
    /// Two edges lie on a common line.
    SharedLine(usize, usize),
}

impl fmt::Display for SegmentViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SegmentViolation::BadUniformity(r) => write!(f, "uniformity {r} < 2"),
            SegmentViolation::WrongSize { edge, size } => write!(f, "edge {edge} has {size} points"),
            SegmentViolation::NotPlanar { edge } => write!(f, "edge {edge} is not in the plane"),
            SegmentViolation::NotConsecutive { edge } => {
                write!(f, "edge {edge} is not a run of consecutive lattice points")
            }
            SegmentViolation::SharedLine(a, b) => write!(f, "edges {a} and {b} share a line"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SegmentReport {
    pub violations: Vec<SegmentViolation>,
}

impl SegmentReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Sorted points if the edge is a run of consecutive lattice points.
fn consecutive_run<T: Coord>(edge: &[LatticePoint<T>]) -> Option<Vec<LatticePoint<T>>> {
    let mut pts = edge.to_vec();
    pts.sort();
    let step = pts[1].sub(&pts[0]);
    if step[0].gcd(&step[1]) != T::one() {
        return None;
    }
    pts.windows(2)
        .all(|w| w[1].sub(&w[0]) == step)
        .then_some(pts)
}

pub fn validate_segment_hypergraph<T: Coord>(h: &SegmentHypergraph<T>) -> SegmentReport {
    let mut violations = Vec::new();
    if h.r < 2 {
        violations.push(SegmentViolation::BadUniformity(h.r));
        return SegmentReport { violations };
    }
    let mut runs: Vec<(usize, Vec<LatticePoint<T>>)> = Vec::new();
    for (i, e) in h.edges.iter().enumerate() {
        if e.len() != h.r {
            violations.push(SegmentViolation::WrongSize { edge: i, size: e.len() });
        } else if e.iter().any(|p| p.dim() != 2) {
            violations.push(SegmentViolation::NotPlanar { edge: i });
        } else if let Some(run) = consecutive_run(e) {
            runs.push((i, run));
        } else {
            violations.push(SegmentViolation::NotConsecutive { edge: i });
        }
    }
    for (a, (i, e)) in runs.iter().enumerate() {
        for (j, f) in &runs[a + 1..] {
            if same_line(&e[0], &e[1], &f[0], &f[1]).expect("validated runs") {
                violations.push(SegmentViolation::SharedLine(*i, *j));
            }
        }
    }
    SegmentReport { violations }
}

/// Color index of the residue pair `(x mod r, y mod r)`, namely `(x mod r) * r + (y mod r)`.
pub fn projection_color<T: Coord>(p: &LatticePoint<T>, r: usize) -> usize {
    let m = T::from_small(r as i64);
    let x = p.x().mod_floor(&m).to_usize().unwrap();
    let y = p.y().mod_floor(&m).to_usize().unwrap();
    x * r + y
}

/// Strong coloring with at most `r^2` colors, keyed by the vertex ids of
/// [`SegmentHypergraph::to_abstract`].
pub fn projection_strong_coloring<T: Coord>(h: &SegmentHypergraph<T>) -> Result<Coloring> {
    let report = validate_segment_hypergraph(h);
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidSegmentHypergraph(v.to_string()));
    }
    let assignment: BTreeMap<VertexId, usize> = h
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| (i as VertexId, projection_color(p, h.r)))
        .collect();
    Ok(Coloring::new(assignment, h.r * h.r))
}

/// One edge per line meeting the grid `{0..r-1}^2` in at least two points:
/// the points on the grid, extended past the lexicographically largest one
/// to a run of `r`.
pub fn sharp_construction<T: Coord>(r: usize) -> Result<SegmentHypergraph<T>> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!("sharp construction needs r >= 2, got {r}")));
    }
    let n = r as i64;
    let grid: Vec<LatticePoint<i64>> = (0..n)
        .flat_map(|x| (0..n).map(move |y| LatticePoint::xy(x, y)))
        .collect();
    let mut lines: BTreeSet<Vec<LatticePoint<i64>>> = BTreeSet::new();
    for (i, a) in grid.iter().enumerate() {
        for b in &grid[i + 1..] {
            let on: Vec<_> = grid
                .iter()
                .filter(|c| orientation(a, b, c).is_eq())
                .cloned()
                .collect();
            lines.insert(on);
        }
    }
    let edges = lines
        .into_iter()
        .map(|mut run| {
            let step = run[1].sub(&run[0]);
            while run.len() < r {
                let next = run.last().unwrap().translate(&step);
                run.push(next);
            }
            run.iter()
                .map(|p| LatticePoint::xy(T::from_small(*p.x()), T::from_small(*p.y())))
                .collect()
        })
        .collect();
    Ok(SegmentHypergraph::new(r, edges))
}

/// One edge per line, points as `x,y` separated by whitespace; `#` comments.
/// Uniformity is taken from the first edge.
pub fn parse_geometric<T: Coord>(text: &str) -> Result<SegmentHypergraph<T>> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let bad = |t: &str| Error::Parse {
            line: i + 1,
            message: format!("invalid point `{t}`"),
        };
        let edge = content
            .split_whitespace()
            .map(|t| {
                let (x, y) = t.split_once(',').ok_or_else(|| bad(t))?;
                let x = x.trim().parse::<T>().map_err(|_| bad(t))?;
                let y = y.trim().parse::<T>().map_err(|_| bad(t))?;
                Ok(LatticePoint::xy(x, y))
            })
            .collect::<Result<Vec<_>>>()?;
        if !edge.is_empty() {
            edges.push(edge);
        }
    }
    let r = edges.first().map_or(0, Vec::len);
    Ok(SegmentHypergraph::new(r, edges))
}

pub fn format_geometric<T: Coord>(h: &SegmentHypergraph<T>) -> String {
    let mut out = String::new();
    for e in &h.edges {
        let pts: Vec<String> = e.iter().map(|p| format!("{},{}", p.x(), p.y())).collect();
        writeln!(out, "{}", pts.join(" ")).unwrap();
    }
    out
}
