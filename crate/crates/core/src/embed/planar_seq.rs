use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::classes::{compute_d, PLANAR_X_OFFSETS};
use crate::error::{Error, Result};
use crate::graph::{k_coloring, Coloring, Graph};
use crate::lattice::{verify_embedding, Checks, LatticePoint, Placement};
use crate::planar::straight_line_grid_drawing;

const MAX_ROUNDS: u32 = 8;

/// Result of [`sequential_planar_embed_detailed`], with the parameters that
/// determine how large the coordinates grew.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarSequentialRun {
    pub placement: Placement<BigInt>,
    pub coloring: Coloring,
    /// Side of the square each grid vertex may move within.
    pub clearance: BigRational,
    pub horizontal_factor: BigInt,
    pub vertical_factor: BigInt,
    /// y-period of the classes.
    pub period: BigInt,
    /// Refinement rounds used; 0 when the first attempt verified.
    pub rounds: u32,
}

/// Sequential planar embedding of a planar graph: every edge is a
/// lattice-visible segment, no two edges cross and no two edges share a
/// supporting line.
pub fn sequential_planar_embed(g: &Graph) -> Result<Placement<BigInt>> {
    sequential_planar_embed_detailed(g).map(|run| run.placement)
}

fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn squared_distance_to_segment(p: (&BigRational, &BigRational), a: (&BigRational, &BigRational), b: (&BigRational, &BigRational)) -> BigRational {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let (px, py) = (p.0 - a.0, p.1 - a.1);
    let len2 = &dx * &dx + &dy * &dy;
    let mut t = (&px * &dx + &py * &dy) / len2;
    if t.is_negative() {
        t = BigRational::zero();
    } else if t > BigRational::one() {
        t = BigRational::one();
    }
    let (ex, ey) = (px - &t * dx, py - t * dy);
    &ex * &ex + &ey * &ey
}

/// A positive rational not exceeding the square root of `q > 0`.
fn sqrt_lower_bound(q: &BigRational) -> BigRational {
    let (num, den) = (q.numer(), q.denom());
    BigRational::new((num * den).sqrt(), den.clone())
}

/// Box side `eps` such that moving every vertex anywhere inside the
/// `eps x eps` square centred on it keeps the drawing planar: a quarter of
/// (a lower bound on) the least distance between a vertex and any other
/// vertex or non-incident edge.
fn clearance(g: &Graph, p: &Placement<BigInt>) -> BigRational {
    let pts: Vec<(u64, BigRational, BigRational)> = p
        .iter()
        .map(|(v, pt)| (v, BigRational::from_integer(pt.x().clone()), BigRational::from_integer(pt.y().clone())))
        .collect();
    let find = |v: u64| {
        let (_, x, y) = &pts[pts.binary_search_by_key(&v, |e| e.0).unwrap()];
        (x, y)
    };
    let mut best: Option<BigRational> = None;
    let mut consider = |d2: BigRational| {
        if best.as_ref().is_none_or(|b| d2 < *b) {
            best = Some(d2);
        }
    };
    for (i, (_, x1, y1)) in pts.iter().enumerate() {
        for (_, x2, y2) in &pts[i + 1..] {
            let (dx, dy) = (x1 - x2, y1 - y2);
            consider(&dx * &dx + &dy * &dy);
        }
    }
    for (u, w) in g.edges() {
        for (v, x, y) in &pts {
            if *v != u && *v != w {
                consider(squared_distance_to_segment((x, y), find(u), find(w)));
            }
        }
    }
    match best {
        Some(d2) => sqrt_lower_bound(&d2) / rational(4),
        None => BigRational::one(),
    }
}

fn ceil(q: &BigRational) -> BigInt {
    q.ceil().to_integer()
}

/// Like [`sequential_planar_embed`], also reporting the construction parameters.
///
/// Steps: draw `g` on the grid; derive the clearance `eps`; stretch
/// horizontally until every vertex box is at least 12 wide and move the
/// boxes into the first quadrant; four-color `g`; snap each x into its box
/// at the smallest value congruent to the class offset `0, 2, 5, 7` mod 12;
/// let `D` be the lcm of all cross-class x-differences; stretch vertically
/// until every box is at least `D` tall; snap each y to the nearest value
/// congruent to the class index mod `D`. Since every cross-class
/// x-difference divides `D` and is coprime to the matching y-offset
/// difference, every edge is lattice-visible. The result is verified and,
/// on any violation, both stretch factors are doubled and the snapping
/// repeated.
pub fn sequential_planar_embed_detailed(g: &Graph) -> Result<PlanarSequentialRun> {
    let drawing = straight_line_grid_drawing::<BigInt>(g)?;
    if g.vertex_count() == 0 {
        return Ok(PlanarSequentialRun {
            placement: drawing.placement,
            coloring: Coloring::new(Default::default(), 0),
            clearance: BigRational::one(),
            horizontal_factor: BigInt::one(),
            vertical_factor: BigInt::one(),
            period: BigInt::from(4),
            rounds: 0,
        });
    }
    let coloring = k_coloring(g, 4).ok_or(Error::Uncolorable { colors: 4 })?;
    let eps = clearance(g, &drawing.placement);
    let twelve = BigInt::from(12);
    let base_h = ceil(&(rational(12) / &eps));

    for round in 0..MAX_ROUNDS {
        let scale = BigInt::one() << round;
        let h = &base_h * &scale;
        let half_w = BigRational::from_integer(h.clone()) * &eps / rational(2);
        let shift_x = ceil(&half_w);

        let mut xs = Vec::with_capacity(g.vertex_count());
        for (v, pt) in drawing.placement.iter() {
            let class = coloring.color(v).unwrap();
            let centre = BigRational::from_integer(&h * pt.x() + &shift_x);
            let lo = ceil(&(&centre - &half_w));
            let x = &lo + (BigInt::from(PLANAR_X_OFFSETS[class]) - &lo).mod_floor(&twelve);
            debug_assert!(BigRational::from_integer(x.clone()) <= &centre + &half_w);
            xs.push((x, class));
        }
        let period = compute_d(&xs)?;

        let s = ceil(&(BigRational::from_integer(period.clone()) / &eps)) * &scale;
        let half_h = BigRational::from_integer(s.clone()) * &eps / rational(2);
        let shift_y = ceil(&half_h);

        let mut placement = Placement::new(2);
        for ((v, pt), (x, class)) in drawing.placement.iter().zip(&xs) {
            let centre = &s * pt.y() + &shift_y;
            let r = (&centre - BigInt::from(*class as i64)).mod_floor(&period);
            let below = &centre - &r;
            let y = if &r + &r <= period { below } else { below + &period };
            debug_assert!(BigRational::from_integer((&y - &centre).abs()) <= half_h);
            placement.insert(v, LatticePoint::xy(x.clone(), y))?;
        }

        let report = verify_embedding(g, &placement, Checks::ALL)?;
        if report.passed() {
            return Ok(PlanarSequentialRun {
                placement,
                coloring,
                clearance: eps,
                horizontal_factor: h,
                vertical_factor: s,
                period,
                rounds: round,
            });
        }
    }
    Err(Error::RetriesExhausted(MAX_ROUNDS as usize))
}
