//! The parametric counterexample families built from
//! `A5(p) = {1, p, p+2, 2p+2, (3p^2 + 3p + 4) / 2}` for odd `p`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analysis::{symmetrize_even, symmetrize_odd};
use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::num::Denomination;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    A5,
    A9,
    A10,
}

impl FamilyKind {
    /// Smallest admissible odd parameter.
    pub fn min_p(self) -> u64 {
        match self {
            FamilyKind::A5 | FamilyKind::A9 => 3,
            FamilyKind::A10 => 5,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::A5 => "a5",
            FamilyKind::A9 => "a9",
            FamilyKind::A10 => "a10",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a5" => Ok(FamilyKind::A5),
            "a9" => Ok(FamilyKind::A9),
            "a10" => Ok(FamilyKind::A10),
            other => Err(Error::BadParameter(format!("unknown family {other:?}"))),
        }
    }
}

/// A family member: kind plus its odd parameter `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Family {
    pub kind: FamilyKind,
    pub p: u64,
}

impl Family {
    pub fn new(kind: FamilyKind, p: u64) -> Result<Self> {
        if p.is_multiple_of(2) {
            return Err(Error::BadParameter(format!("p = {p} must be odd")));
        }
        if p < kind.min_p() {
            return Err(Error::BadParameter(format!(
                "p = {p} is below {} for {kind}",
                kind.min_p()
            )));
        }
        Ok(Self { kind, p })
    }

    pub fn basis<T: Denomination>(&self) -> Result<Basis<T>> {
        let p = T::from_u64(self.p).ok_or(Error::Overflow { what: "p" })?;
        let half = a5_unchecked(p)?;
        match self.kind {
            FamilyKind::A5 => Ok(half),
            FamilyKind::A9 => symmetrize_odd(&half),
            FamilyKind::A10 => symmetrize_even(&half),
        }
    }
}

fn a5_unchecked<T: Denomination>(p: T) -> Result<Basis<T>> {
    let one = T::one();
    let two = one + one;
    let three = two + one;
    let four = two + two;
    const WHAT: &str = "family element";
    let top = three
        .mul_or(p, WHAT)?
        .mul_or(p, WHAT)?
        .add_or(three.mul_or(p, WHAT)?, WHAT)?
        .add_or(four, WHAT)?
        / two;
    Basis::new(vec![
        one,
        p,
        p.add_or(two, WHAT)?,
        two.mul_or(p, WHAT)?.add_or(two, WHAT)?,
        top,
    ])
}

/// `A5(p)` for odd `p >= 3`.
pub fn family_a5<T: Denomination>(p: u64) -> Result<Basis<T>> {
    Family::new(FamilyKind::A5, p)?.basis()
}

/// The 9-element symmetric extension of `A5(p)`, odd `p >= 3`.
pub fn family_a9<T: Denomination>(p: u64) -> Result<Basis<T>> {
    Family::new(FamilyKind::A9, p)?.basis()
}

/// The 10-element symmetric extension of `A5(p)`, odd `p >= 5`.
pub fn family_a10<T: Denomination>(p: u64) -> Result<Basis<T>> {
    Family::new(FamilyKind::A10, p)?.basis()
}
