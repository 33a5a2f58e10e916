//! Deterministic SVG rendering of two-dimensional placements.

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use seqembed::embed::parity_coloring;
use seqembed::lattice::{verify_embedding, Checks, Violation};
use seqembed::{Error, Graph, Placement, Result};

const MARGIN: i64 = 20;
const UNIT: i64 = 24;
/// Spans above this are scaled onto a fixed canvas and lose their lattice dots.
const MAX_DOT_SPAN: i64 = 40;
const CANVAS: i64 = 800;
const PALETTE: [&str; 8] = [
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666",
];

/// Small drawings use a fixed unit per lattice step. Large ones map each
/// axis onto the canvas separately; axis-wise affine maps keep incidences
/// and crossings, up to rounding.
struct Frame {
    min_x: BigInt,
    max_y: BigInt,
    span_x: BigInt,
    span_y: BigInt,
    scaled: bool,
}

impl Frame {
    fn px(&self, x: &BigInt) -> i64 {
        MARGIN + self.map(x - &self.min_x, &self.span_x)
    }

    fn py(&self, y: &BigInt) -> i64 {
        MARGIN + self.map(&self.max_y - y, &self.span_y)
    }

    fn map(&self, offset: BigInt, span: &BigInt) -> i64 {
        let v = if self.scaled {
            if span.is_zero() {
                BigInt::zero()
            } else {
                offset * CANVAS / span
            }
        } else {
            offset * UNIT
        };
        v.to_i64().expect("canvas coordinate fits")
    }
}

pub fn render_svg(g: &Graph, p: &Placement<BigInt>) -> Result<String> {
    if p.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: p.dim(),
        });
    }
    p.check_valid_for(g)?;
    let crossing: Vec<(u64, u64)> = verify_embedding(g, p, Checks::PLANAR)?
        .violations
        .iter()
        .flat_map(|v| match v {
            Violation::Crossing(e, f) => vec![*e, *f],
            _ => vec![],
        })
        .collect();

    let mut out = String::new();
    let Some(bounds) = p.bounds() else {
        let side = 2 * MARGIN;
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
        )
        .unwrap();
        out.push_str("</svg>\n");
        return Ok(out);
    };
    let (min_x, max_x) = bounds[0].clone();
    let (min_y, max_y) = bounds[1].clone();
    let span_x = &max_x - &min_x;
    let span_y = &max_y - &min_y;
    let scaled = span_x.clone().max(span_y.clone()) > BigInt::from(MAX_DOT_SPAN);
    let frame = Frame {
        min_x: min_x.clone(),
        max_y: max_y.clone(),
        span_x,
        span_y,
        scaled,
    };
    let width = frame.px(&max_x) + MARGIN;
    let height = frame.py(&min_y) + MARGIN;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{width}" height="{height}" fill="white"/>"#).unwrap();

    if !scaled {
        out.push_str("<g class=\"lattice\" fill=\"#bbbbbb\">\n");
        let lo_x = min_x.to_i64().unwrap();
        let hi_x = max_x.to_i64().unwrap();
        let lo_y = min_y.to_i64().unwrap();
        let hi_y = max_y.to_i64().unwrap();
        for x in lo_x..=hi_x {
            for y in lo_y..=hi_y {
                let cx = frame.px(&BigInt::from(x));
                let cy = frame.py(&BigInt::from(y));
                writeln!(out, r#"<circle cx="{cx}" cy="{cy}" r="1.5"/>"#).unwrap();
            }
        }
        out.push_str("</g>\n");
    }

    out.push_str("<g class=\"edges\" stroke-width=\"2\">\n");
    for (u, v) in g.edges() {
        let (a, b) = (p.point(u)?, p.point(v)?);
        let stroke = if crossing.contains(&(u, v)) { "#d62728" } else { "#333333" };
        writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}" data-edge="{u}-{v}"/>"#,
            frame.px(a.x()),
            frame.py(a.y()),
            frame.px(b.x()),
            frame.py(b.y())
        )
        .unwrap();
    }
    out.push_str("</g>\n");

    let colors = parity_coloring(p);
    out.push_str("<g class=\"vertices\" font-family=\"monospace\" font-size=\"10\">\n");
    for (v, pt) in p.iter() {
        let (cx, cy) = (frame.px(pt.x()), frame.py(pt.y()));
        let fill = PALETTE[colors.color(v).unwrap_or(0) % PALETTE.len()];
        writeln!(
            out,
            r#"<circle cx="{cx}" cy="{cy}" r="6" fill="{fill}" data-vertex="{v}"/>"#
        )
        .unwrap();
        writeln!(out, r#"<text x="{}" y="{}">{v}</text>"#, cx + 7, cy - 7).unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
