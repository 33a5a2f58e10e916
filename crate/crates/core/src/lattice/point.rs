use std::collections::BTreeMap;
use std::fmt::{self, Write};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::scalar::Coord;

/// Point of `Z^d`, compared lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint<T>(Vec<T>);

impl<T: Coord> LatticePoint<T> {
    /// Panics if `coords` is empty.
    pub fn new(coords: Vec<T>) -> Self {
        assert!(!coords.is_empty(), "lattice points need at least one coordinate");
        LatticePoint(coords)
    }

    pub fn xy(x: T, y: T) -> Self {
        LatticePoint(vec![x, y])
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64s(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| T::from_small(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.0
    }

    pub fn x(&self) -> &T {
        &self.0[0]
    }

    pub fn y(&self) -> &T {
        &self.0[1]
    }

    /// `self - other`, coordinatewise.
    pub fn sub(&self, other: &Self) -> Vec<T> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.clone() - b.clone())
            .collect()
    }

    pub fn translate(&self, by: &[T]) -> Self {
        LatticePoint(
            self.0
                .iter()
                .zip(by)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<T: fmt::Display> fmt::Display for LatticePoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('(')?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{c}")?;
        }
        f.write_char(')')
    }
}

/// Map from vertices to lattice points of a fixed dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Placement<T> {
    dim: usize,
    points: BTreeMap<VertexId, LatticePoint<T>>,
}

impl<T: Coord> Placement<T> {
    pub fn new(dim: usize) -> Self {
        Placement {
            dim,
            points: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn insert(&mut self, v: VertexId, p: LatticePoint<T>) -> Result<()> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.dim(),
            });
        }
        self.points.insert(v, p);
        Ok(())
    }

    pub fn get(&self, v: VertexId) -> Option<&LatticePoint<T>> {
        self.points.get(&v)
    }

    /// Like [`Placement::get`] but errors on a missing vertex.
    pub fn point(&self, v: VertexId) -> Result<&LatticePoint<T>> {
        self.points.get(&v).ok_or(Error::MissingPosition(v))
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &LatticePoint<T>)> {
        self.points.iter().map(|(&v, p)| (v, p))
    }

    /// Errors unless every vertex of `g` is placed and no two vertices share a point.
    pub fn check_valid_for(&self, g: &Graph) -> Result<()> {
        for v in g.vertices() {
            self.point(v)?;
        }
        let mut seen: BTreeMap<&LatticePoint<T>, VertexId> = BTreeMap::new();
        for (v, p) in self.iter() {
            if let Some(&u) = seen.get(p) {
                return Err(Error::NotInjective(u, v));
            }
            seen.insert(p, v);
        }
        Ok(())
    }

    /// Per-axis `(min, max)`, or `None` when empty.
    pub fn bounds(&self) -> Option<Vec<(T, T)>> {
        let mut it = self.points.values();
        let first = it.next()?;
        let mut b: Vec<(T, T)> = first.coords().iter().map(|c| (c.clone(), c.clone())).collect();
        for p in it {
            for (bi, c) in b.iter_mut().zip(p.coords()) {
                if *c < bi.0 {
                    bi.0 = c.clone();
                }
                if *c > bi.1 {
                    bi.1 = c.clone();
                }
            }
        }
        Some(b)
    }
}

/// Parses `<vertex-id> <x> <y> [more coords]` lines; `#` starts a comment.
/// The dimension is taken from the first point; an empty file yields an
/// empty placement of dimension 2.
pub fn parse_placement<T: Coord>(text: &str) -> Result<Placement<T>> {
    let mut placement: Option<Placement<T>> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        if toks.len() < 2 {
            return Err(Error::Parse {
                line,
                message: "expected a vertex id followed by coordinates".into(),
            });
        }
        let v: VertexId = toks[0].parse().map_err(|_| Error::Parse {
            line,
            message: format!("invalid vertex id `{}`", toks[0]),
        })?;
        let coords = toks[1..]
            .iter()
            .map(|t| {
                t.parse::<T>().map_err(|_| Error::Parse {
                    line,
                    message: format!("invalid coordinate `{t}`"),
                })
            })
            .collect::<Result<Vec<T>>>()?;
        let p = placement.get_or_insert_with(|| Placement::new(coords.len()));
        if p.get(v).is_some() {
            return Err(Error::Parse {
                line,
                message: format!("vertex {v} placed twice"),
            });
        }
        p.insert(v, LatticePoint::new(coords))
            .map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
    }
    Ok(placement.unwrap_or_else(|| Placement::new(2)))
}

pub fn format_placement<T: Coord>(p: &Placement<T>) -> String {
    let mut out = String::new();
    for (v, pt) in p.iter() {
        write!(out, "{v}").unwrap();
        for c in pt.coords() {
            write!(out, " {c}").unwrap();
        }
        out.push('\n');
    }
    out
}
