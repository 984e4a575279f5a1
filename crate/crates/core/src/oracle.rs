//! Independent brute-force cover: enumerate every coefficient vector.

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::num::Denomination;
use crate::table::saturation;

/// Default cap on the number of enumerated coefficient vectors.
pub const DEFAULT_ENUMERATION_CEILING: u128 = 100_000_000;

/// Number of vectors `c in N^k` with `sum(c) <= h`, i.e. `C(h + k, k)`.
pub fn vector_count(k: usize, h: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        acc = acc.checked_mul(h as u128 + i)? / i;
    }
    Some(acc)
}

/// Cover computed by enumerating all sums of at most `h` stamps, refusing
/// when more than `ceiling` vectors would be visited.
pub fn brute_force_cover_with_ceiling<T: Denomination>(
    basis: &Basis<T>,
    h: u32,
    ceiling: u128,
) -> Result<T> {
    if h == 0 {
        return Err(Error::ZeroStamps);
    }
    let count = vector_count(basis.k(), h).unwrap_or(u128::MAX);
    if count > ceiling {
        return Err(Error::TooLarge { count, ceiling });
    }
    let limit = saturation(basis, h)?.index("h * a_k")?;
    let elements = basis
        .elements()
        .iter()
        .map(|e| e.index("basis element"))
        .collect::<Result<Vec<_>>>()?;
    let mut reachable = vec![false; limit + 2];
    mark(&elements, 0, 0, h, &mut reachable);
    let n = reachable[1..].iter().position(|&r| !r).unwrap_or(limit + 1);
    T::from_index(n, "cover")
}

pub fn brute_force_cover<T: Denomination>(basis: &Basis<T>, h: u32) -> Result<T> {
    brute_force_cover_with_ceiling(basis, h, DEFAULT_ENUMERATION_CEILING)
}

// Visits each vector once: position `i` chooses c_i, then recurses on i + 1.
fn mark(elements: &[usize], i: usize, sum: usize, left: u32, reachable: &mut [bool]) {
    if i == elements.len() {
        reachable[sum] = true;
        return;
    }
    let mut s = sum;
    for c in 0..=left {
        mark(elements, i + 1, s, left - c, reachable);
        s += elements[i];
    }
}
