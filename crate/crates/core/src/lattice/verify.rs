use std::fmt::{self, Write};
use std::str::FromStr;

use super::{interior_lattice_count, same_line, segments_cross, LatticePoint, Placement};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::scalar::Coord;

type Edge = (VertexId, VertexId);

/// Which properties [`verify_embedding`] should test.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Checks {
    pub sequential: bool,
    pub planar: bool,
    pub one_edge_per_line: bool,
}

impl Checks {
    pub const ALL: Checks = Checks {
        sequential: true,
        planar: true,
        one_edge_per_line: true,
    };
    pub const NONE: Checks = Checks {
        sequential: false,
        planar: false,
        one_edge_per_line: false,
    };
    pub const SEQUENTIAL: Checks = Checks {
        sequential: true,
        ..Checks::NONE
    };
    pub const PLANAR: Checks = Checks {
        planar: true,
        ..Checks::NONE
    };
    pub const ONE_EDGE_PER_LINE: Checks = Checks {
        one_edge_per_line: true,
        ..Checks::NONE
    };

    pub fn union(self, other: Checks) -> Checks {
        Checks {
            sequential: self.sequential || other.sequential,
            planar: self.planar || other.planar,
            one_edge_per_line: self.one_edge_per_line || other.one_edge_per_line,
        }
    }
}

impl FromStr for Checks {
    type Err = Error;

    /// Comma-separated subset of `sequential`, `planar`, `line`, or `all`.
    fn from_str(s: &str) -> Result<Self> {
        let mut c = Checks::NONE;
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            c = c.union(match tok {
                "sequential" => Checks::SEQUENTIAL,
                "planar" => Checks::PLANAR,
                "line" | "one_edge_per_line" => Checks::ONE_EDGE_PER_LINE,
                "all" => Checks::ALL,
                other => return Err(Error::InvalidArgument(format!("unknown check `{other}`"))),
            });
        }
        Ok(c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation<T> {
    /// Edge whose segment contains `interior` lattice points, the first of which is `witness`.
    NotSequential {
        edge: Edge,
        interior: T,
        witness: LatticePoint<T>,
    },
    Crossing(Edge, Edge),
    SharedLine(Edge, Edge),
}

impl<T> Violation<T> {
    pub fn check_name(&self) -> &'static str {
        match self {
            Violation::NotSequential { .. } => "sequential",
            Violation::Crossing(..) => "planar",
            Violation::SharedLine(..) => "one_edge_per_line",
        }
    }
}

impl<T: Coord> fmt::Display for Violation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotSequential {
                edge,
                interior,
                witness,
            } => write!(
                f,
                "sequential {}-{} interior={} witness={}",
                edge.0, edge.1, interior, witness
            ),
            Violation::Crossing(a, b) | Violation::SharedLine(a, b) => write!(
                f,
                "{} {}-{} {}-{}",
                self.check_name(),
                a.0,
                a.1,
                b.0,
                b.1
            ),
        }
    }
}

/// Outcome of [`verify_embedding`]. A flag is `None` when its check was not
/// requested, otherwise `false` exactly when a violation of that check is listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport<T> {
    pub sequential_ok: Option<bool>,
    pub planar_ok: Option<bool>,
    pub one_edge_per_line_ok: Option<bool>,
    pub violations: Vec<Violation<T>>,
}

impl<T: Coord> VerificationReport<T> {
    /// True iff every requested check passed.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn flags(&self) -> [(&'static str, Option<bool>); 3] {
        [
            ("sequential", self.sequential_ok),
            ("planar", self.planar_ok),
            ("one_edge_per_line", self.one_edge_per_line_ok),
        ]
    }

    /// Human-readable summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, flag) in self.flags() {
            let status = match flag {
                None => "not checked".to_string(),
                Some(true) => "ok".to_string(),
                Some(false) => {
                    let n = self
                        .violations
                        .iter()
                        .filter(|v| v.check_name() == name)
                        .count();
                    format!("FAILED ({n} violation{})", if n == 1 { "" } else { "s" })
                }
            };
            writeln!(out, "{name:<18} {status}").unwrap();
        }
        for v in &self.violations {
            writeln!(out, "  {v}").unwrap();
        }
        out
    }

    /// Line-oriented `key=value` document; unrequested checks are omitted
    /// and each violation is one `violation=` entry.
    pub fn to_key_value(&self) -> String {
        let mut out = String::new();
        for (name, flag) in self.flags() {
            if let Some(ok) = flag {
                writeln!(out, "{name}_ok={ok}").unwrap();
            }
        }
        writeln!(out, "violations={}", self.violations.len()).unwrap();
        for v in &self.violations {
            writeln!(out, "violation={v}").unwrap();
        }
        out
    }
}

/// Runs the requested checks over `g` placed by `p` and lists every violation.
///
/// Violations are ordered by check (sequential, planar, line) and then by
/// edge, or edge pair, in lexicographic order.
pub fn verify_embedding<T: Coord>(
    g: &Graph,
    p: &Placement<T>,
    checks: Checks,
) -> Result<VerificationReport<T>> {
    p.check_valid_for(g)?;
    if (checks.planar || checks.one_edge_per_line) && p.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: p.dim(),
        });
    }
    let edges: Vec<(Edge, &LatticePoint<T>, &LatticePoint<T>)> = g
        .edges()
        .map(|(u, v)| Ok(((u, v), p.point(u)?, p.point(v)?)))
        .collect::<Result<_>>()?;

    let mut report = VerificationReport {
        sequential_ok: None,
        planar_ok: None,
        one_edge_per_line_ok: None,
        violations: Vec::new(),
    };

    if checks.sequential {
        let before = report.violations.len();
        for &(edge, a, b) in &edges {
            let interior = interior_lattice_count(a, b)?;
            if !interior.is_zero() {
                let step = interior.clone() + T::one();
                let witness =
                    LatticePoint::new(a.coords().iter().zip(b.sub(a)).map(|(c, d)| c.clone() + d / step.clone()).collect());
                report.violations.push(Violation::NotSequential {
                    edge,
                    interior,
                    witness,
                });
            }
        }
        report.sequential_ok = Some(report.violations.len() == before);
    }

    for (enabled, is_planar) in [(checks.planar, true), (checks.one_edge_per_line, false)] {
        if !enabled {
            continue;
        }
        let before = report.violations.len();
        for (i, &(e, a, b)) in edges.iter().enumerate() {
            for &(f, c, d) in &edges[i + 1..] {
                if is_planar {
                    if segments_cross(a, b, c, d)? {
                        report.violations.push(Violation::Crossing(e, f));
                    }
                } else if same_line(a, b, c, d)? {
                    report.violations.push(Violation::SharedLine(e, f));
                }
            }
        }
        let ok = Some(report.violations.len() == before);
        if is_planar {
            report.planar_ok = ok;
        } else {
            report.one_edge_per_line_ok = ok;
        }
    }
    Ok(report)
}
