use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{is_proper_coloring, k_coloring, Coloring, Graph, VertexId};
use crate::lattice::{LatticePoint, Placement};
use crate::scalar::Coord;

/// x-offsets modulo 12 of the four classes used by the planar pipeline;
/// the matching y-offsets modulo `D` are `0, 1, 2, 3`.
pub const PLANAR_X_OFFSETS: [i64; 4] = [0, 2, 5, 7];

/// The `n`-th point of plane class `class` (0-based):
///
/// | class | points        |
/// |-------|---------------|
/// | 0     | `(0, 6n)`     |
/// | 1     | `(1, 2n)`     |
/// | 2     | `(2, 1 + 2n)` |
/// | 3     | `(3, 1 + 6n)` |
///
/// Any segment joining points of different classes has coprime coordinate
/// differences.
pub fn plane_class_point<T: Coord>(class: usize, n: u64) -> (T, T) {
    let n = T::from_u64(n).expect("class index fits the coordinate type");
    let (x, step, base) = match class {
        0 => (0, 6, 0),
        1 => (1, 2, 0),
        2 => (2, 2, 1),
        3 => (3, 6, 1),
        _ => panic!("plane classes are 0..4, got {class}"),
    };
    (T::from_small(x), T::from_small(base) + T::from_small(step) * n)
}

fn check_coloring(g: &Graph, c: &Coloring, limit: usize) -> Result<()> {
    c.check_total(g)?;
    for v in g.vertices() {
        let color = c.color(v).unwrap();
        if color >= limit {
            return Err(Error::TooManyColors { color, limit });
        }
    }
    if !is_proper_coloring(g, c)? {
        let (u, v) = g.edges().find(|&(u, v)| c.color(u) == c.color(v)).unwrap();
        return Err(Error::ImproperColoring(u, v));
    }
    Ok(())
}

/// Sequential embedding in `Z^2` from a proper coloring with colors `0..4`.
///
/// Color `i` maps to plane class `i`; within a class, vertices take the
/// class points `n = 0, 1, 2, ...` in ascending id order.
pub fn embed_4colorable<T: Coord>(g: &Graph, c: &Coloring) -> Result<Placement<T>> {
    embed_d(g, c, 2)
}

/// Sequential embedding in `Z^d` from a proper coloring with at most `2^d` colors.
///
/// Color `c` is split into plane class `c mod 4` for the first two
/// coordinates and the bits of `c / 4` for coordinates `3..=d`, which are
/// therefore 0 or 1. Vertices sharing a color are spread along their plane
/// class in ascending id order.
pub fn embed_d<T: Coord>(g: &Graph, c: &Coloring, d: usize) -> Result<Placement<T>> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("dimension must be at least 2, got {d}")));
    }
    let limit = 1usize.checked_shl(d as u32).unwrap_or(usize::MAX);
    check_coloring(g, c, limit)?;
    let mut next_index: BTreeMap<usize, u64> = BTreeMap::new();
    let mut placement = Placement::new(d);
    for v in g.vertices() {
        let color = c.color(v).unwrap();
        let slot = next_index.entry(color).or_insert(0);
        let (x, y) = plane_class_point::<T>(color % 4, *slot);
        *slot += 1;
        let mut coords = vec![x, y];
        let suffix = color / 4;
        coords.extend((0..d - 2).map(|bit| T::from_small(((suffix >> bit) & 1) as i64)));
        placement.insert(v, LatticePoint::new(coords))?;
    }
    Ok(placement)
}

/// Colors `g` with four colors by exact search and embeds it in the plane.
pub fn embed_in_plane<T: Coord>(g: &Graph) -> Result<Placement<T>> {
    embed_in_dimension(g, 2)
}

/// Colors `g` with `2^d` colors by exact search and embeds it in `Z^d`.
pub fn embed_in_dimension<T: Coord>(g: &Graph, d: usize) -> Result<Placement<T>> {
    if !(2..=16).contains(&d) {
        return Err(Error::InvalidArgument(format!("dimension must be in 2..=16, got {d}")));
    }
    let colors = 1usize << d;
    let c = k_coloring(g, colors).ok_or(Error::Uncolorable { colors })?;
    embed_d(g, &c, d)
}

/// Colors each vertex by the parities of its coordinates: bit `i` of the
/// color is the parity of coordinate `i`.
///
/// Two points with equal parities differ by an all-even vector, so on any
/// sequential placement this coloring is proper.
pub fn parity_coloring<T: Coord>(p: &Placement<T>) -> Coloring {
    let assignment = p
        .iter()
        .map(|(v, pt)| {
            let color = pt
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, c)| c.is_odd())
                .fold(0usize, |acc, (i, _)| acc | (1 << i));
            (v, color)
        })
        .collect::<BTreeMap<VertexId, usize>>();
    Coloring::new(assignment, 1 << p.dim())
}

/// Least common multiple of `|x_u - x_v|` over all pairs in different
/// classes, raised to 4 when smaller.
pub fn compute_d<T: Coord>(positions: &[(T, usize)]) -> Result<T> {
    if positions.is_empty() {
        return Err(Error::InvalidArgument("compute_d needs at least one position".into()));
    }
    let mut l = T::one();
    for (i, (xi, ci)) in positions.iter().enumerate() {
        for (xj, cj) in &positions[i + 1..] {
            if ci != cj {
                let diff = (xi.clone() - xj.clone()).abs();
                if !diff.is_zero() {
                    l = l.lcm(&diff);
                }
            }
        }
    }
    let four = T::from_small(4);
    Ok(if l < four { four } else { l })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::lattice::{interior_lattice_count, verify_embedding, Checks};
    use num_bigint::BigInt;

    fn colors(pairs: &[(VertexId, usize)]) -> Coloring {
        Coloring::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn k4_lands_on_first_class_points() {
        let g = complete(4);
        let p: Placement<i64> = embed_4colorable(&g, &colors(&[(0, 0), (1, 1), (2, 2), (3, 3)])).unwrap();
        let pts: Vec<_> = p.iter().map(|(_, pt)| pt.clone()).collect();
        assert_eq!(
            pts,
            vec![
                LatticePoint::xy(0, 0),
                LatticePoint::xy(1, 0),
                LatticePoint::xy(2, 1),
                LatticePoint::xy(3, 1)
            ]
        );
        for (u, v) in g.edges() {
            assert_eq!(interior_lattice_count(p.get(u).unwrap(), p.get(v).unwrap()).unwrap(), 0);
        }
    }

    #[test]
    fn single_edge() {
        let p: Placement<i64> = embed_4colorable(&complete(2), &colors(&[(0, 0), (1, 1)])).unwrap();
        assert_eq!(p.get(0), Some(&LatticePoint::xy(0, 0)));
        assert_eq!(p.get(1), Some(&LatticePoint::xy(1, 0)));
    }

    #[test]
    fn bad_colorings_rejected() {
        let g = complete(2);
        assert_eq!(
            embed_4colorable::<i64>(&g, &colors(&[(0, 0), (1, 0)])),
            Err(Error::ImproperColoring(0, 1))
        );
        assert!(matches!(
            embed_4colorable::<i64>(&g, &colors(&[(0, 0), (1, 4)])),
            Err(Error::TooManyColors { .. })
        ));
        assert_eq!(embed_4colorable::<i64>(&g, &colors(&[(0, 0)])), Err(Error::MissingColor(1)));
        assert_eq!(embed_in_plane::<i64>(&complete(5)), Err(Error::Uncolorable { colors: 4 }));
    }

    #[test]
    fn class_pairs_are_sequential_and_on_distinct_lines() {
        // every cross-class pair for small class indices
        for a in 0..4 {
            for b in 0..4 {
                if a == b {
                    continue;
                }
                for n in 0..8 {
                    for m in 0..8 {
                        let (x1, y1) = plane_class_point::<i64>(a, n);
                        let (x2, y2) = plane_class_point::<i64>(b, m);
                        let p = LatticePoint::xy(x1, y1);
                        let q = LatticePoint::xy(x2, y2);
                        assert_eq!(interior_lattice_count(&p, &q).unwrap(), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_three_k8_and_k5() {
        let k8 = complete(8);
        let c = Coloring::from_pairs((0..8).map(|v| (v, v as usize)));
        let p: Placement<BigInt> = embed_d(&k8, &c, 3).unwrap();
        assert_eq!(p.len(), 8);
        let r = verify_embedding(&k8, &p, Checks::SEQUENTIAL).unwrap();
        assert!(r.passed());
        assert_eq!(k8.edge_count(), 28);

        let p: Placement<i64> = embed_in_dimension(&complete(5), 3).unwrap();
        assert!(verify_embedding(&complete(5), &p, Checks::SEQUENTIAL).unwrap().passed());
        assert!(matches!(
            embed_d::<i64>(&k8, &Coloring::from_pairs((0..8).map(|v| (v, 8))), 3),
            Err(Error::TooManyColors { .. })
        ));
    }

    #[test]
    fn dimension_two_matches_plane() {
        let g = octahedron();
        let c = k_coloring(&g, 4).unwrap();
        assert_eq!(embed_d::<i64>(&g, &c, 2).unwrap(), embed_4colorable::<i64>(&g, &c).unwrap());
    }

    #[test]
    fn parity_readout() {
        let mut p = Placement::<i64>::new(2);
        p.insert(0, LatticePoint::xy(0, 0)).unwrap();
        p.insert(1, LatticePoint::xy(1, 0)).unwrap();
        p.insert(2, LatticePoint::xy(2, 1)).unwrap();
        let c = parity_coloring(&p);
        assert_eq!(c.color(0), Some(0));
        assert_eq!(c.color(1), Some(1));
        assert_eq!(c.color(2), Some(2));
        assert_eq!(c.k(), 4);

        // (0,0) and (2,2) share parities, so the edge between them is improper
        let mut p = Placement::<i64>::new(2);
        p.insert(0, LatticePoint::xy(0, 0)).unwrap();
        p.insert(1, LatticePoint::xy(2, 2)).unwrap();
        assert!(!is_proper_coloring(&complete(2), &parity_coloring(&p)).unwrap());
    }

    #[test]
    fn parity_of_k4_embedding_is_proper() {
        let g = complete(4);
        let p: Placement<i64> = embed_in_plane(&g).unwrap();
        let c = parity_coloring(&p);
        assert!(is_proper_coloring(&g, &c).unwrap());
        assert_eq!(c.colors_used(), 4);
    }

    #[test]
    fn d_examples() {
        let pos = |xs: &[(i64, usize)]| compute_d(xs).unwrap();
        assert_eq!(pos(&[(0, 0), (2, 1), (5, 2), (7, 3)]), 210);
        assert_eq!(pos(&[(0, 0), (1, 1)]), 4);
        assert_eq!(pos(&[(0, 0), (12, 0), (5, 2)]), 35);
        assert_eq!(pos(&[(3, 1)]), 4);
        assert!(compute_d::<i64>(&[]).is_err());
    }

    /// Pairwise-difference oracle: D must be the smallest positive multiple
    /// of every cross-class difference, at least 4.
    #[test]
    fn d_is_minimal_common_multiple() {
        let pts = [(0i64, 0usize), (4, 1), (6, 2), (10, 3), (12, 0)];
        let d = compute_d(&pts).unwrap();
        let diffs: Vec<i64> = pts
            .iter()
            .enumerate()
            .flat_map(|(i, a)| pts[i + 1..].iter().filter(move |b| b.1 != a.1).map(move |b| (a.0 - b.0).abs()))
            .collect();
        let smallest = (1..).find(|m| diffs.iter().all(|x| m % x == 0)).unwrap();
        assert_eq!(d, smallest.max(4));
    }
}
