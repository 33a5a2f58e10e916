//! The integer scalar every lattice computation is generic over.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer usable as a lattice coordinate.
///
/// Implemented for every type that behaves like a signed integer ring with
/// decimal I/O: `i64`, `i128` and [`num_bigint::BigInt`] in particular.
/// Fixed-width types are fast but may overflow on the large coordinates
/// produced by the planar pipeline; that pipeline always uses `BigInt`.
pub trait Coord:
    Integer + Signed + Clone + Ord + Hash + Debug + Display + FromStr + FromPrimitive + ToPrimitive
{
    fn from_small(v: i64) -> Self {
        Self::from_i64(v).expect("coordinate type cannot hold a small integer")
    }
}

impl<T> Coord for T where
    T: Integer
        + Signed
        + Clone
        + Ord
        + Hash
        + Debug
        + Display
        + FromStr
        + FromPrimitive
        + ToPrimitive
{
}
