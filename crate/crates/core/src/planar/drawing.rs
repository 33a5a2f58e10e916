use std::collections::BTreeSet;

use super::embedding::planarity_embedding;
use super::rotation::Rotation;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::{LatticePoint, Placement};
use crate::scalar::Coord;

/// Planar straight-line drawing on the non-negative integer grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridDrawing<T> {
    pub placement: Placement<T>,
    /// Largest x-coordinate used.
    pub width: u64,
    /// Largest y-coordinate used.
    pub height: u64,
}

/// Draws a planar graph with straight edges on a `(2n-4) x (n-2)` grid.
///
/// Each connected component is triangulated, given a canonical ordering and
/// laid out by the shift method; the added edges are discarded afterwards.
/// Components sit side by side, each starting one column right of the
/// previous component's rightmost vertex. Components with one or two
/// vertices use the fixed layouts `(0,0)` and `(0,0)-(1,0)`.
pub fn straight_line_grid_drawing<T: Coord>(g: &Graph) -> Result<GridDrawing<T>> {
    let emb = planarity_embedding(g).ok_or(Error::NonPlanar)?;
    let (ids, rot) = emb.to_rotation();
    let mut placement = Placement::new(2);
    let (mut width, mut height) = (0u64, 0u64);
    let mut cursor = 0i64;
    for comp in g.components() {
        let local: Vec<usize> = comp.iter().map(|v| ids.binary_search(v).unwrap()).collect();
        let coords: Vec<(i64, i64)> = match comp.len() {
            1 => vec![(0, 0)],
            2 => vec![(0, 0), (1, 0)],
            _ => {
                let mut sub = Rotation::new(local.len());
                for (i, &gi) in local.iter().enumerate() {
                    sub.order[i] = rot.order[gi]
                        .iter()
                        .map(|w| local.binary_search(w).unwrap())
                        .collect();
                }
                shift_layout(&mut sub)
            }
        };
        let max_x = coords.iter().map(|c| c.0).max().unwrap();
        for (&v, &(x, y)) in comp.iter().zip(&coords) {
            let x = x + cursor;
            width = width.max(x as u64);
            height = height.max(y as u64);
            placement.insert(v, LatticePoint::xy(T::from_small(x), T::from_small(y)))?;
        }
        cursor += max_x + 1;
    }
    Ok(GridDrawing {
        placement,
        width,
        height,
    })
}

/// Closes every face walk that revisits a vertex by adding chords, so the
/// graph becomes biconnected. Returns the face walk containing `s -> o`, or
/// nothing if that dart was already handled.
fn close_face(rot: &mut Rotation, s: usize, o: usize, counted: &mut BTreeSet<(usize, usize)>) -> Vec<usize> {
    if !counted.insert((s, o)) {
        return Vec::new();
    }
    let (mut v1, mut v2) = (s, o);
    let mut v3 = rot.next_dart(v1, v2).1;
    let mut face = vec![s];
    let mut on_face = BTreeSet::from([s]);
    while v2 != s || v3 != o {
        if on_face.contains(&v2) {
            rot.add_chord(v1, v2, v3);
            counted.insert((v2, v3));
            counted.insert((v3, v1));
            v2 = v1;
        } else {
            on_face.insert(v2);
            face.push(v2);
        }
        v1 = v2;
        (v2, v3) = rot.next_dart(v2, v3);
        counted.insert((v1, v2));
    }
    face
}

/// Fan-triangulates the face containing `v1 -> v2`, skipping chords that
/// already exist elsewhere.
fn triangulate_face(rot: &mut Rotation, mut v1: usize, mut v2: usize) {
    let mut v3 = rot.next_dart(v1, v2).1;
    let mut v4 = rot.next_dart(v2, v3).1;
    if v1 == v2 || v1 == v3 {
        return;
    }
    while v1 != v4 {
        if rot.has_edge(v1, v3) {
            (v1, v2, v3) = (v2, v3, v4);
        } else {
            rot.add_chord(v1, v2, v3);
            (v2, v3) = (v3, v4);
        }
        v4 = rot.next_dart(v2, v3).1;
    }
}

/// Turns a connected planar rotation system with at least three vertices
/// into a triangulation; returns an outer triangle `(a, b, c)`.
fn triangulate(rot: &mut Rotation) -> (usize, usize, usize) {
    let mut counted = BTreeSet::new();
    let mut faces = Vec::new();
    for v in 0..rot.len() {
        for w in rot.order[v].clone() {
            let f = close_face(rot, v, w, &mut counted);
            if !f.is_empty() {
                faces.push(f);
            }
        }
    }
    let mut outer = 0;
    for (i, f) in faces.iter().enumerate() {
        if f.len() > faces[outer].len() {
            outer = i;
        }
    }
    for f in &faces {
        triangulate_face(rot, f[0], f[1]);
    }
    let (a, b) = (faces[outer][0], faces[outer][1]);
    let c = rot.next_dart(a, b).1;
    (a, b, c)
}

/// Canonical ordering of a triangulation with outer face `(a, b, c)`,
/// found by peeling chord-free contour vertices. Returns `v3` and, for
/// each later vertex in order, the vertex with its leftmost and rightmost
/// contour neighbours at insertion time.
fn canonical_order(rot: &Rotation, (a, b, c): (usize, usize, usize)) -> (usize, Vec<(usize, usize, usize)>) {
    let n = rot.len();
    let mut removed = vec![false; n];
    let mut contour = vec![a, c, b];
    let mut peeled = Vec::new();
    while peeled.len() + 3 < n {
        let mut on_contour = vec![usize::MAX; n];
        for (i, &v) in contour.iter().enumerate() {
            on_contour[v] = i;
        }
        let i = (1..contour.len() - 1)
            .find(|&i| {
                rot.order[contour[i]].iter().all(|&w| {
                    removed[w] || on_contour[w] == usize::MAX || on_contour[w].abs_diff(i) == 1
                })
            })
            .expect("a triangulation always has a chord-free contour vertex");
        let v = contour[i];
        let (l, r) = (contour[i - 1], contour[i + 1]);
        let ring = &rot.order[v];
        let k = ring.len();
        let il = ring.iter().position(|&w| w == l).unwrap();
        let arc = |step: usize| -> Vec<usize> {
            let mut out = Vec::new();
            let mut j = (il + step) % k;
            while ring[j] != r {
                out.push(ring[j]);
                j = (j + step) % k;
            }
            out
        };
        let (fwd, bwd) = (arc(1), arc(k - 1));
        let present = |s: &[usize]| s.iter().all(|&w| !removed[w]);
        let inner = match (present(&fwd), present(&bwd)) {
            (true, true) => {
                if fwd.is_empty() {
                    bwd
                } else {
                    fwd
                }
            }
            (true, false) => fwd,
            (false, true) => bwd,
            (false, false) => unreachable!("contour vertex with removed neighbours on both sides"),
        };
        removed[v] = true;
        contour.splice(i..=i, inner);
        peeled.push((v, l, r));
    }
    debug_assert_eq!(contour.len(), 3);
    peeled.reverse();
    (contour[1], peeled)
}

/// Shift-method coordinates for every vertex of a connected planar
/// rotation system with at least three vertices.
fn shift_layout(rot: &mut Rotation) -> Vec<(i64, i64)> {
    let n = rot.len();
    let outer = triangulate(rot);
    debug_assert_eq!(
        rot.order.iter().map(Vec::len).sum::<usize>(),
        2 * (3 * n - 6),
        "triangulation has the wrong edge count"
    );
    let (v3, order) = canonical_order(rot, outer);
    let (v1, v2) = (outer.0, outer.1);
    let mut pos = vec![(0i64, 0i64); n];
    pos[v2] = (2, 0);
    pos[v3] = (1, 1);
    let mut under: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut contour = vec![v1, v3, v2];
    for (v, l, r) in order {
        let p = contour.iter().position(|&w| w == l).unwrap();
        let q = contour.iter().position(|&w| w == r).unwrap();
        debug_assert!(p < q);
        for (j, &w) in contour.iter().enumerate().skip(p + 1) {
            let dx = if j < q { 1 } else { 2 };
            for &u in &under[w] {
                pos[u].0 += dx;
            }
        }
        let ((xl, yl), (xr, yr)) = (pos[l], pos[r]);
        pos[v] = ((xl + xr + yr - yl) / 2, (xr - xl + yl + yr) / 2);
        let mut covered = vec![v];
        for &w in &contour[p + 1..q] {
            covered.extend(under[w].iter().copied());
        }
        under[v] = covered;
        contour.splice(p + 1..q, [v]);
    }
    pos
}
