//! Lexicographic enumeration of bases inside a box `a_k <= ak_max`.

use crate::analysis::{symmetrize_even, symmetrize_odd};
use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::num::Denomination;

/// Which bases an enumeration yields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasisShape {
    /// Bases with `a_i + a_{k-i} = a_k`.
    Symmetric,
    /// Every strictly increasing basis starting at 1.
    All,
}

/// Odometer over the free prefix of a basis.
///
/// For symmetric bases only the first `ceil(k/2)` elements are free: the top
/// element is `2 a_m` (even `k`) or `a_m + a_{m-1}` (odd `k`) and the rest are
/// mirrored. Lexicographic order on the free prefix is lexicographic order on
/// the full bases, because the remaining elements increase with the prefix.
#[derive(Debug, Clone)]
pub struct Bases<T> {
    shape: BasisShape,
    k: usize,
    ak_max: T,
    free: Vec<T>,
    started: bool,
    done: bool,
}

impl<T: Denomination> Bases<T> {
    pub fn new(shape: BasisShape, k: usize, ak_max: T) -> Self {
        assert!(k >= 1, "a basis has at least one element");
        let len = free_len(shape, k);
        Self {
            shape,
            k,
            ak_max,
            free: Vec::with_capacity(len),
            started: false,
            done: false,
        }
    }

    /// Continue strictly after `last`, which must belong to this enumeration.
    pub fn resume_after(mut self, last: &Basis<T>) -> Result<Self> {
        let len = free_len(self.shape, self.k);
        if last.k() != self.k {
            return Err(Error::BadParameter(format!(
                "checkpoint basis {last} does not have {} elements",
                self.k
            )));
        }
        let free = last.elements()[..len].to_vec();
        if self.expand(&free).as_ref().ok() != Some(last) || last.top() > self.ak_max {
            return Err(Error::BadParameter(format!(
                "checkpoint basis {last} is outside the enumeration"
            )));
        }
        self.free = free;
        self.started = true;
        Ok(self)
    }

    fn top(&self, free: &[T]) -> Option<T> {
        let n = free.len();
        match self.shape {
            BasisShape::All => Some(free[n - 1]),
            BasisShape::Symmetric if self.k == 1 => Some(T::one()),
            BasisShape::Symmetric if self.k.is_multiple_of(2) => {
                free[n - 1].checked_add(&free[n - 1])
            }
            BasisShape::Symmetric => free[n - 1].checked_add(&free[n - 2]),
        }
    }

    fn feasible(&self) -> bool {
        self.top(&self.free).is_some_and(|t| t <= self.ak_max)
    }

    fn expand(&self, free: &[T]) -> Result<Basis<T>> {
        let half = Basis::new(free.to_vec())?;
        match self.shape {
            BasisShape::All => Ok(half),
            BasisShape::Symmetric if self.k == 1 => Ok(half),
            BasisShape::Symmetric if self.k.is_multiple_of(2) => symmetrize_even(&half),
            BasisShape::Symmetric => symmetrize_odd(&half),
        }
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            let len = free_len(self.shape, self.k);
            let mut x = T::zero();
            for _ in 0..len {
                match x.checked_add(&T::one()) {
                    Some(next) => x = next,
                    None => return false,
                }
                self.free.push(x);
            }
            return self.feasible();
        }
        for pos in (1..self.free.len()).rev() {
            let Some(bumped) = self.free[pos].checked_add(&T::one()) else {
                continue;
            };
            self.free[pos] = bumped;
            let mut ok = true;
            for j in pos + 1..self.free.len() {
                match self.free[j - 1].checked_add(&T::one()) {
                    Some(v) => self.free[j] = v,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            // Minimal completions only grow with the prefix, so an
            // infeasible one rules out every larger value at `pos`.
            if ok && self.feasible() {
                return true;
            }
        }
        false
    }
}

fn free_len(shape: BasisShape, k: usize) -> usize {
    match shape {
        BasisShape::All => k,
        BasisShape::Symmetric => k.div_ceil(2),
    }
}

impl<T: Denomination> Iterator for Bases<T> {
    type Item = Basis<T>;

    fn next(&mut self) -> Option<Basis<T>> {
        if self.done || !self.advance() {
            self.done = true;
            return None;
        }
        Some(
            self.expand(&self.free)
                .expect("odometer states expand to valid bases"),
        )
    }
}

/// Every symmetric basis with `k` elements and `a_k <= ak_max`, in lexicographic order.
pub fn enumerate_symmetric<T: Denomination>(k: usize, ak_max: T) -> Bases<T> {
    Bases::new(BasisShape::Symmetric, k, ak_max)
}

/// Every basis with `k` elements and `a_k <= ak_max`, in lexicographic order.
pub fn enumerate_all<T: Denomination>(k: usize, ak_max: T) -> Bases<T> {
    Bases::new(BasisShape::All, k, ak_max)
}
