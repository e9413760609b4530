//! Scalar bound for the exact lattice kernels.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, NumAssign, Signed, ToPrimitive};

/// Everything the lattice and cone algorithms need from an integer type.
///
/// Blanket-implemented for all primitive signed integers via the `num`
/// traits; `i64` (the [`crate::Int`] alias) and `i128` are the instantiations
/// exercised by the test suite.
pub trait LatticeInt:
    Integer + Signed + NumAssign + FromPrimitive + ToPrimitive + Copy + Debug + Display + Hash + 'static
{
    fn from_int(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("constant out of scalar range")
    }

    fn as_int(self) -> i64 {
        <Self as ToPrimitive>::to_i64(&self).expect("value out of i64 range")
    }
}

impl<T> LatticeInt for T where
    T: Integer
        + Signed
        + NumAssign
        + FromPrimitive
        + ToPrimitive
        + Copy
        + Debug
        + Display
        + Hash
        + 'static
{
}
