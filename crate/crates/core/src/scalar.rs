use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{CheckedSub, FromPrimitive, ToPrimitive, Unsigned};

/// Unsigned integer type usable as a class multiplicity.
///
/// Implemented for the primitive unsigned integers and for [`BigUint`].
/// Fixed-width types overflow (and panic in debug builds) on large tensor
/// products; use [`BigUint`] for sweeps over big degrees.
pub trait Multiplicity:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + FromStr
    + Unsigned
    + Integer
    + CheckedSub
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_u64_exact(value: u64) -> Self {
        Self::from_u64(value).expect("multiplicity type cannot represent a u64 value")
    }
}

impl Multiplicity for u32 {}
impl Multiplicity for u64 {}
impl Multiplicity for u128 {}
impl Multiplicity for usize {}
impl Multiplicity for BigUint {}
