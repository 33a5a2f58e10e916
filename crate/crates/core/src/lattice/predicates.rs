use std::cmp::Ordering;

use super::LatticePoint;
use crate::error::{Error, Result};
use crate::scalar::Coord;

fn check_segment<T: Coord>(a: &LatticePoint<T>, b: &LatticePoint<T>) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    if a == b {
        return Err(Error::DegenerateSegment(a.to_string()));
    }
    Ok(())
}

fn check_planar<T: Coord>(a: &LatticePoint<T>, b: &LatticePoint<T>) -> Result<()> {
    check_segment(a, b)?;
    if a.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: a.dim(),
        });
    }
    Ok(())
}

/// Number of integer points strictly inside segment `ab`:
/// `gcd(|a_1 - b_1|, ..., |a_d - b_d|) - 1`.
pub fn interior_lattice_count<T: Coord>(a: &LatticePoint<T>, b: &LatticePoint<T>) -> Result<T> {
    check_segment(a, b)?;
    let g = a
        .sub(b)
        .into_iter()
        .fold(T::zero(), |acc, d| acc.gcd(&d.abs()));
    Ok(g - T::one())
}

/// True iff segment `ab` has no interior lattice points.
pub fn is_sequential_segment<T: Coord>(a: &LatticePoint<T>, b: &LatticePoint<T>) -> Result<bool> {
    Ok(interior_lattice_count(a, b)?.is_zero())
}

/// Sign of the cross product `(b - a) x (c - a)`; `Greater` is counter-clockwise.
pub fn orientation<T: Coord>(a: &LatticePoint<T>, b: &LatticePoint<T>, c: &LatticePoint<T>) -> Ordering {
    let ab = b.sub(a);
    let ac = c.sub(a);
    let lhs = ab[0].clone() * ac[1].clone();
    let rhs = ab[1].clone() * ac[0].clone();
    lhs.cmp(&rhs)
}

fn dot<T: Coord>(u: &[T], v: &[T]) -> T {
    u.iter()
        .zip(v)
        .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

// `r` is assumed collinear with `p` and `q`.
fn within_box<T: Coord>(p: &LatticePoint<T>, q: &LatticePoint<T>, r: &LatticePoint<T>) -> bool {
    (0..2).all(|i| {
        let (lo, hi) = if p.coords()[i] <= q.coords()[i] {
            (&p.coords()[i], &q.coords()[i])
        } else {
            (&q.coords()[i], &p.coords()[i])
        };
        lo <= &r.coords()[i] && &r.coords()[i] <= hi
    })
}

/// True iff the closed segments `p1q1` and `p2q2` meet anywhere other than
/// at a common endpoint.
///
/// A point shared by both segments as an endpoint of each is allowed; any
/// other contact, including an endpoint touching the other segment's
/// interior or collinear overlap, counts as crossing.
pub fn segments_cross<T: Coord>(
    p1: &LatticePoint<T>,
    q1: &LatticePoint<T>,
    p2: &LatticePoint<T>,
    q2: &LatticePoint<T>,
) -> Result<bool> {
    check_planar(p1, q1)?;
    check_planar(p2, q2)?;

    let shared = [(p1, q1, p2, q2), (p1, q1, q2, p2), (q1, p1, p2, q2), (q1, p1, q2, p2)]
        .into_iter()
        .filter(|(w1, _, w2, _)| w1 == w2)
        .collect::<Vec<_>>();
    match shared.as_slice() {
        [] => {}
        [(w, a, _, b)] => {
            // contact beyond `w` only if both segments leave `w` in the same direction
            return Ok(orientation(w, a, b) == Ordering::Equal
                && dot(&a.sub(w), &b.sub(w)).is_positive());
        }
        _ => return Ok(true),
    }

    let o1 = orientation(p1, q1, p2);
    let o2 = orientation(p1, q1, q2);
    let o3 = orientation(p2, q2, p1);
    let o4 = orientation(p2, q2, q1);
    if o1 != o2 && o3 != o4 {
        return Ok(true);
    }
    use Ordering::Equal;
    Ok((o1 == Equal && within_box(p1, q1, p2))
        || (o2 == Equal && within_box(p1, q1, q2))
        || (o3 == Equal && within_box(p2, q2, p1))
        || (o4 == Equal && within_box(p2, q2, q1)))
}

/// True iff all four endpoints lie on one line.
pub fn same_line<T: Coord>(
    p1: &LatticePoint<T>,
    q1: &LatticePoint<T>,
    p2: &LatticePoint<T>,
    q2: &LatticePoint<T>,
) -> Result<bool> {
    check_planar(p1, q1)?;
    check_planar(p2, q2)?;
    Ok(orientation(p1, q1, p2) == Ordering::Equal && orientation(p1, q1, q2) == Ordering::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::Ratio;
    use proptest::prelude::*;

    fn pt(c: &[i64]) -> LatticePoint<i64> {
        LatticePoint::new(c.to_vec())
    }

    /// Walks one coordinate with nonzero difference through every integer
    /// strictly between the endpoints and keeps the values at which all
    /// other coordinates are integral.
    fn brute_interior(a: &[i64], b: &[i64]) -> i64 {
        let axis = (0..a.len()).find(|&i| a[i] != b[i]).unwrap();
        let (lo, hi) = (a[axis].min(b[axis]), a[axis].max(b[axis]));
        let span = b[axis] - a[axis];
        (lo + 1..hi)
            .filter(|&t| {
                (0..a.len()).all(|j| ((t - a[axis]) * (b[j] - a[j])) % span == 0)
            })
            .count() as i64
    }

    type Q = Ratio<i64>;

    fn on_closed(p: &[i64], q: &[i64], x: (Q, Q)) -> bool {
        // parameter t along pq, checked on both axes
        let d = (q[0] - p[0], q[1] - p[1]);
        let t = if d.0 != 0 {
            (x.0 - Q::from(p[0])) / Q::from(d.0)
        } else {
            (x.1 - Q::from(p[1])) / Q::from(d.1)
        };
        t >= Q::from(0)
            && t <= Q::from(1)
            && Q::from(p[0]) + t * Q::from(d.0) == x.0
            && Q::from(p[1]) + t * Q::from(d.1) == x.1
    }

    /// Independent oracle: solve the 2x2 system in rationals; in the
    /// parallel case test every endpoint against the other segment.
    fn brute_cross(p1: [i64; 2], q1: [i64; 2], p2: [i64; 2], q2: [i64; 2]) -> bool {
        let ends1 = [p1, q1];
        let ends2 = [p2, q2];
        let is_shared = |x: &(Q, Q)| {
            ends1.iter().any(|e| (Q::from(e[0]), Q::from(e[1])) == *x)
                && ends2.iter().any(|e| (Q::from(e[0]), Q::from(e[1])) == *x)
        };
        let d1 = (q1[0] - p1[0], q1[1] - p1[1]);
        let d2 = (q2[0] - p2[0], q2[1] - p2[1]);
        let det = d1.0 * d2.1 - d1.1 * d2.0;
        if det != 0 {
            let rx = p2[0] - p1[0];
            let ry = p2[1] - p1[1];
            let t = Q::new(rx * d2.1 - ry * d2.0, det);
            let x = (Q::from(p1[0]) + t * Q::from(d1.0), Q::from(p1[1]) + t * Q::from(d1.1));
            return on_closed(&p1, &q1, x) && on_closed(&p2, &q2, x) && !is_shared(&x);
        }
        // parallel: sample the overlap at quarter points of each segment
        for (a, b, c, d) in [(p1, q1, p2, q2), (p2, q2, p1, q1)] {
            for k in 0..=4 {
                let t = Q::new(k, 4);
                let x = (
                    Q::from(a[0]) + t * Q::from(b[0] - a[0]),
                    Q::from(a[1]) + t * Q::from(b[1] - a[1]),
                );
                if on_closed(&c, &d, x) && !is_shared(&x) {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn interior_counts() {
        assert_eq!(interior_lattice_count(&pt(&[0, 0]), &pt(&[3, 7])).unwrap(), 0);
        assert_eq!(interior_lattice_count(&pt(&[0, 0]), &pt(&[4, 6])).unwrap(), 1);
        assert_eq!(brute_interior(&[0, 0], &[4, 6]), 1);
        assert_eq!(interior_lattice_count(&pt(&[0, 0, 0]), &pt(&[2, 2, 2])).unwrap(), 1);
        assert_eq!(interior_lattice_count(&pt(&[0, 0]), &pt(&[6, 10])).unwrap(), 1);
        assert_eq!(brute_interior(&[0, 0], &[6, 10]), 1);
    }

    #[test]
    fn sequential_segments() {
        assert!(is_sequential_segment(&pt(&[1, 0]), &pt(&[2, 1])).unwrap());
        assert!(!is_sequential_segment(&pt(&[0, 0]), &pt(&[2, 4])).unwrap());
        assert!(!is_sequential_segment(&pt(&[0, 0]), &pt(&[6, 10])).unwrap());
    }

    #[test]
    fn degenerate_and_mismatch() {
        assert!(matches!(
            interior_lattice_count(&pt(&[1, 1]), &pt(&[1, 1])),
            Err(Error::DegenerateSegment(_))
        ));
        assert!(matches!(
            interior_lattice_count(&pt(&[1, 1]), &pt(&[1, 1, 1])),
            Err(Error::DimensionMismatch { .. })
        ));
        let o = pt(&[0, 0]);
        assert!(segments_cross(&o, &o, &pt(&[1, 0]), &pt(&[2, 0])).is_err());
        assert!(same_line(&o, &pt(&[1, 0]), &pt(&[1, 1]), &pt(&[1, 1])).is_err());
        assert!(segments_cross(&pt(&[0, 0, 0]), &pt(&[1, 0, 0]), &pt(&[0, 1, 0]), &pt(&[1, 1, 0])).is_err());
    }

    #[test]
    fn crossing_examples() {
        let c = |a: [i64; 2], b: [i64; 2], e: [i64; 2], f: [i64; 2]| {
            segments_cross(&pt(&a), &pt(&b), &pt(&e), &pt(&f)).unwrap()
        };
        assert!(c([0, 0], [2, 2], [0, 2], [2, 0]));
        assert!(!c([0, 0], [1, 0], [0, 1], [1, 1]));
        assert!(c([0, 0], [2, 0], [1, 0], [3, 0]));
        assert!(brute_cross([0, 0], [2, 0], [1, 0], [3, 0]));
        // shared endpoint only
        assert!(!c([0, 0], [2, 0], [0, 0], [0, 3]));
        // collinear continuation through a shared endpoint
        assert!(!c([0, 0], [1, 1], [1, 1], [2, 2]));
        // folded back over each other
        assert!(c([0, 0], [2, 2], [0, 0], [1, 1]));
        // T-junction
        assert!(c([0, 0], [4, 0], [2, 0], [2, 5]));
        // collinear but disjoint
        assert!(!c([0, 0], [1, 0], [2, 0], [3, 0]));
    }

    #[test]
    fn same_line_examples() {
        let s = |a: [i64; 2], b: [i64; 2], e: [i64; 2], f: [i64; 2]| {
            same_line(&pt(&a), &pt(&b), &pt(&e), &pt(&f)).unwrap()
        };
        assert!(s([0, 0], [1, 1], [2, 2], [3, 3]));
        assert!(!s([0, 0], [1, 1], [0, 1], [1, 2]));
        assert!(s([0, 0], [1, 2], [2, 4], [3, 6]));
    }

    #[test]
    fn bigint_matches_i64() {
        let a = LatticePoint::<BigInt>::from_i64s(&[-4, 9, 12]);
        let b = LatticePoint::<BigInt>::from_i64s(&[8, -3, 0]);
        assert_eq!(interior_lattice_count(&a, &b).unwrap(), BigInt::from(11));
    }

    #[test]
    fn crossing_matches_rational_oracle_exhaustively_small() {
        // all segment pairs with endpoints in a 3x3 box
        let pts: Vec<[i64; 2]> = (0..3).flat_map(|x| (0..3).map(move |y| [x, y])).collect();
        let segs: Vec<([i64; 2], [i64; 2])> = pts
            .iter()
            .flat_map(|&a| pts.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
            .collect();
        for &(a, b) in &segs {
            for &(c, d) in &segs {
                if (a, b) == (c, d) {
                    continue;
                }
                assert_eq!(
                    segments_cross(&pt(&a), &pt(&b), &pt(&c), &pt(&d)).unwrap(),
                    brute_cross(a, b, c, d),
                    "{a:?}{b:?} vs {c:?}{d:?}"
                );
            }
        }
    }

    fn p2() -> impl Strategy<Value = [i64; 2]> {
        [-20i64..=20, -20i64..=20]
    }

    proptest! {
        #[test]
        fn interior_count_matches_enumeration(a in p2(), b in p2()) {
            prop_assume!(a != b);
            prop_assert_eq!(interior_lattice_count(&pt(&a), &pt(&b)).unwrap(), brute_interior(&a, &b));
        }

        #[test]
        fn crossing_matches_oracle(a in p2(), b in p2(), c in p2(), d in p2()) {
            prop_assume!(a != b && c != d);
            prop_assert_eq!(segments_cross(&pt(&a), &pt(&b), &pt(&c), &pt(&d)).unwrap(), brute_cross(a, b, c, d));
        }

        #[test]
        fn predicates_symmetric_and_translation_invariant(
            a in p2(), b in p2(), c in p2(), d in p2(), t in p2()
        ) {
            prop_assume!(a != b && c != d);
            let (pa, pb, pc, pd) = (pt(&a), pt(&b), pt(&c), pt(&d));
            let cross = segments_cross(&pa, &pb, &pc, &pd).unwrap();
            let line = same_line(&pa, &pb, &pc, &pd).unwrap();
            let count = interior_lattice_count(&pa, &pb).unwrap();
            prop_assert_eq!(segments_cross(&pb, &pa, &pc, &pd).unwrap(), cross);
            prop_assert_eq!(segments_cross(&pa, &pb, &pd, &pc).unwrap(), cross);
            prop_assert_eq!(segments_cross(&pc, &pd, &pa, &pb).unwrap(), cross);
            prop_assert_eq!(same_line(&pb, &pa, &pd, &pc).unwrap(), line);
            prop_assert_eq!(same_line(&pc, &pd, &pa, &pb).unwrap(), line);
            prop_assert_eq!(interior_lattice_count(&pb, &pa).unwrap(), count);
            let tr = |p: &LatticePoint<i64>| p.translate(&t);
            prop_assert_eq!(segments_cross(&tr(&pa), &tr(&pb), &tr(&pc), &tr(&pd)).unwrap(), cross);
            prop_assert_eq!(same_line(&tr(&pa), &tr(&pb), &tr(&pc), &tr(&pd)).unwrap(), line);
            prop_assert_eq!(interior_lattice_count(&tr(&pa), &tr(&pb)).unwrap(), count);
        }
    }
}
