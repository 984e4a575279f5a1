//! Scalar abstraction for stamp denominations.
//!
//! Every algorithm in this crate is generic over the unsigned integer type
//! used to store denominations and represented values. Arithmetic on these
//! values is always checked; a product such as `h * a_k` that does not fit
//! the chosen width surfaces as [`Error::Overflow`](crate::Error::Overflow).

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{FromPrimitive, PrimInt, Unsigned};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{Error, Result};

/// An unsigned integer type usable as a stamp denomination.
pub trait Denomination:
    PrimInt
    + Unsigned
    + FromPrimitive
    + Display
    + Debug
    + Hash
    + Default
    + Send
    + Sync
    + Serialize
    + DeserializeOwned
    + 'static
{
    /// Checked `self + rhs`, tagging the failure with `what`.
    fn add_or(self, rhs: Self, what: &'static str) -> Result<Self> {
        self.checked_add(&rhs).ok_or(Error::Overflow { what })
    }

    /// Checked `self * rhs`, tagging the failure with `what`.
    fn mul_or(self, rhs: Self, what: &'static str) -> Result<Self> {
        self.checked_mul(&rhs).ok_or(Error::Overflow { what })
    }

    /// Lift a stamp count into the denomination type.
    fn from_count(n: u32, what: &'static str) -> Result<Self> {
        Self::from_u32(n).ok_or(Error::Overflow { what })
    }

    /// Convert to a table index.
    fn index(self, what: &'static str) -> Result<usize> {
        self.to_usize().ok_or(Error::Overflow { what })
    }

    /// Convert from a table index.
    fn from_index(i: usize, what: &'static str) -> Result<Self> {
        Self::from_usize(i).ok_or(Error::Overflow { what })
    }
}

impl<T> Denomination for T where
    T: PrimInt
        + Unsigned
        + FromPrimitive
        + Display
        + Debug
        + Hash
        + Default
        + Send
        + Sync
        + Serialize
        + DeserializeOwned
        + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checked_helpers_report_overflow() {
        assert_eq!(200u8.add_or(100, "x"), Err(Error::Overflow { what: "x" }));
        assert_eq!(16u8.mul_or(16, "y"), Err(Error::Overflow { what: "y" }));
        assert_eq!(u8::from_count(256, "z"), Err(Error::Overflow { what: "z" }));
        assert_eq!(7u64.mul_or(6, "w"), Ok(42));
    }
}
