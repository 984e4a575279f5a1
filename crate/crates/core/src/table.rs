//! The cover engine: a minimal-stamp dynamic program over `0..=bound`.

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::generation::Generation;
use crate::num::Denomination;

/// Largest table the engine will allocate, in entries.
pub const MAX_TABLE_ENTRIES: usize = 1 << 28;

const UNREACHABLE: u32 = u32::MAX;

/// `min_stamps[x]` for every `0 <= x <= bound`: the fewest stamps summing to `x`.
///
/// The table is filled by the forward recurrence
/// `min_stamps[x] = 1 + min_i min_stamps[x - a_i]` and can be extended in
/// place, since each entry only depends on smaller values.
#[derive(Debug, Clone)]
pub struct MinStampTable<T> {
    basis: Basis<T>,
    // Elements that fit a table index; larger ones never apply.
    steps: Vec<usize>,
    min_stamps: Vec<u32>,
}

impl<T: Denomination> MinStampTable<T> {
    pub fn new(basis: &Basis<T>, bound: T) -> Result<Self> {
        let steps = basis
            .elements()
            .iter()
            .map_while(|e| e.to_usize())
            .collect();
        let mut table = Self {
            basis: basis.clone(),
            steps,
            min_stamps: vec![0],
        };
        table.extend_to(bound)?;
        Ok(table)
    }

    pub fn basis(&self) -> &Basis<T> {
        &self.basis
    }

    /// Inclusive upper bound of the table.
    pub fn bound(&self) -> usize {
        self.min_stamps.len() - 1
    }

    /// Grow the table so that it covers `0..=bound`. Never shrinks.
    pub fn extend_to(&mut self, bound: T) -> Result<()> {
        let required = bound
            .to_u128()
            .and_then(|b| b.checked_add(1))
            .ok_or(Error::Overflow {
                what: "table bound",
            })?;
        if required > MAX_TABLE_ENTRIES as u128 {
            return Err(Error::TableTooLarge {
                required,
                limit: MAX_TABLE_ENTRIES,
            });
        }
        let end = required as usize;
        let start = self.min_stamps.len();
        if end <= start {
            return Ok(());
        }
        self.min_stamps.reserve(end - start);
        for x in start..end {
            let best = self
                .steps
                .iter()
                .take_while(|&&a| a <= x)
                .map(|&a| self.min_stamps[x - a])
                .filter(|&m| m != UNREACHABLE)
                .min()
                .map_or(UNREACHABLE, |m| m + 1);
            self.min_stamps.push(best);
        }
        Ok(())
    }

    /// Minimal stamp count for `x`, or `None` if `x` is beyond the table or unreachable.
    pub fn get(&self, x: usize) -> Option<u32> {
        self.min_stamps
            .get(x)
            .copied()
            .filter(|&m| m != UNREACHABLE)
    }

    /// The raw per-value minima; unreachable entries hold `u32::MAX`.
    pub fn as_slice(&self) -> &[u32] {
        &self.min_stamps
    }

    /// Minimal-weight generation of `x`, reconstructed by always stepping
    /// back through the largest denomination on an optimal path.
    pub fn generation(&self, x: usize) -> Option<Generation<T>> {
        let mut remaining = x;
        let mut need = self.get(x)?;
        let mut coefficients = vec![0u32; self.basis.k()];
        while remaining > 0 {
            let i = (0..self.steps.len())
                .rev()
                .find(|&i| {
                    let a = self.steps[i];
                    a <= remaining && self.min_stamps[remaining - a] == need - 1
                })
                .expect("an optimal predecessor exists for every reachable value");
            coefficients[i] += 1;
            remaining -= self.steps[i];
            need -= 1;
        }
        let gen = Generation::from_coefficients(&self.basis, coefficients)
            .expect("a table entry's generation fits the denomination type");
        Some(gen)
    }

    /// Largest `n <= bound` such that every `1..=n` needs at most `h` stamps.
    pub fn prefix_cover(&self, h: u32) -> usize {
        self.min_stamps[1..]
            .iter()
            .position(|&m| m > h)
            .unwrap_or(self.bound())
    }
}

fn check_h(h: u32) -> Result<()> {
    if h == 0 {
        Err(Error::ZeroStamps)
    } else {
        Ok(())
    }
}

/// `h * a_k`, the largest cover possible with `h` stamps.
pub fn saturation<T: Denomination>(basis: &Basis<T>, h: u32) -> Result<T> {
    T::from_count(h, "h * a_k")?.mul_or(basis.top(), "h * a_k")
}

/// Table sufficient to locate the first gap at `h` stamps: bound `h * a_k + 1`.
pub fn min_stamp_table<T: Denomination>(basis: &Basis<T>, bound: T) -> Result<MinStampTable<T>> {
    if bound.is_zero() {
        return Err(Error::ZeroStamps);
    }
    MinStampTable::new(basis, bound)
}

/// The cover `n(h, A)`: the largest `n` such that every positive integer up to
/// `n` is a sum of at most `h` elements of the basis.
pub fn cover<T: Denomination>(basis: &Basis<T>, h: u32) -> Result<T> {
    check_h(h)?;
    let bound = saturation(basis, h)?.add_or(T::one(), "h * a_k + 1")?;
    let bound_ix = bound.index("h * a_k + 1")?;
    // Grow in slices so that a gap near the start stops the work early.
    let mut table = MinStampTable::new(basis, T::zero())?;
    let mut reached = 0usize;
    loop {
        let next = reached.saturating_mul(2).max(64).min(bound_ix);
        table.extend_to(T::from_index(next, "table bound")?)?;
        let n = table.prefix_cover(h);
        if n < next || next == bound_ix {
            return T::from_index(n, "cover");
        }
        reached = next;
    }
}

/// One row of a [`CoverProfile`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CoverRow<T> {
    pub h: u32,
    pub cover: T,
    /// Whether `cover == h * a_k`.
    pub saturated: bool,
}

/// Covers for `h = 1..=h_max`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(bound = "T: Denomination")]
pub struct CoverProfile<T> {
    pub basis: Basis<T>,
    pub rows: Vec<CoverRow<T>>,
}

/// Covers for every `h` up to `h_max`, from a single table of bound `h_max * a_k + 1`.
pub fn cover_profile<T: Denomination>(basis: &Basis<T>, h_max: u32) -> Result<CoverProfile<T>> {
    check_h(h_max)?;
    let bound = saturation(basis, h_max)?.add_or(T::one(), "h * a_k + 1")?;
    let table = MinStampTable::new(basis, bound)?;
    let rows = (1..=h_max)
        .map(|h| {
            let cover = T::from_index(table.prefix_cover(h), "cover")?;
            Ok(CoverRow {
                h,
                cover,
                saturated: cover == saturation(basis, h)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoverProfile {
        basis: basis.clone(),
        rows,
    })
}

/// A minimal-weight generation of `x` using at most `h` stamps.
pub fn find_generation<T: Denomination>(basis: &Basis<T>, x: T, h: u32) -> Result<Generation<T>> {
    check_h(h)?;
    if x.is_zero() {
        return Ok(Generation::empty(basis));
    }
    let table = MinStampTable::new(basis, x)?;
    let ix = x.index("value")?;
    match table.get(ix) {
        Some(m) if m <= h => Ok(table.generation(ix).expect("reachable")),
        _ => Err(Error::NotRepresentable {
            value: x.to_string(),
            h,
        }),
    }
}
