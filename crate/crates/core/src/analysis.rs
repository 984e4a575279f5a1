//! Symmetric bases: symmetry tests, symmetrization, `h0`/`h1`, and the
//! reflection of generations below `a_k`.

use serde::{Deserialize, Serialize};

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::generation::Generation;
use crate::num::Denomination;
use crate::table::{saturation, MinStampTable};

/// `h1` cap used for non-symmetric bases when the caller gives none.
pub const DEFAULT_H1_CAP: u32 = 64;

/// True iff `a_i + a_{k-i} = a_k` for every `1 <= i <= k-1`.
pub fn is_symmetric<T: Denomination>(basis: &Basis<T>) -> bool {
    let a = basis.elements();
    let top = basis.top();
    let k = a.len();
    (0..k - 1).all(|i| a[i].checked_add(&a[k - 2 - i]) == Some(top))
}

fn mirror<T: Denomination>(half: &[T], top: T, k: usize) -> Result<Basis<T>> {
    let mut elements = half.to_vec();
    elements.resize(k, T::zero());
    for i in 0..half.len() {
        // 1-based a_{k-i} = a_k - a_i
        let j = k - 2 - i;
        if j >= half.len() {
            elements[j] = top - half[i];
        }
    }
    elements[k - 1] = top;
    Basis::new(elements)
}

/// Extends `m >= 2` elements to the symmetric basis of `2m - 1` elements with
/// `a_k = half[m] + half[m-1]`.
pub fn symmetrize_odd<T: Denomination>(half: &Basis<T>) -> Result<Basis<T>> {
    let h = half.elements();
    let m = h.len();
    if m < 2 {
        return Err(Error::HalfTooShort { min: 2, got: m });
    }
    let top = h[m - 1].add_or(h[m - 2], "symmetric top element")?;
    mirror(h, top, 2 * m - 1)
}

/// Extends `m >= 1` elements to the symmetric basis of `2m` elements with
/// `a_k = 2 * half[m]`.
pub fn symmetrize_even<T: Denomination>(half: &Basis<T>) -> Result<Basis<T>> {
    let h = half.elements();
    let m = h.len();
    let top = half.top().add_or(half.top(), "symmetric top element")?;
    mirror(h, top, 2 * m)
}

/// `a_{k-1} = a_k - 1`. False for `k = 1`, which has no `a_{k-1}`.
pub fn meure_applicable<T: Denomination>(basis: &Basis<T>) -> bool {
    let a = basis.elements();
    a.len() >= 2 && a[a.len() - 2] + T::one() == basis.top()
}

/// Smallest `h` with `n(h, A) > a_k`.
///
/// That holds exactly when every value in `1..=a_k + 1` needs at most `h`
/// stamps, so `h0` is the largest minimal stamp count over that range.
pub fn compute_h0<T: Denomination>(basis: &Basis<T>) -> Result<u32> {
    let bound = basis.top().add_or(T::one(), "a_k + 1")?;
    let table = MinStampTable::new(basis, bound)?;
    Ok(table.as_slice()[1..]
        .iter()
        .copied()
        .max()
        .expect("table covers at least 1..=2"))
}

/// Outcome of an `h1` search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum H1 {
    Found(u32),
    NotFoundWithinCap(u32),
}

impl H1 {
    pub fn found(self) -> Option<u32> {
        match self {
            H1::Found(h) => Some(h),
            H1::NotFoundWithinCap(_) => None,
        }
    }
}

/// First `h` in `h0..=cap` with `n(h, A) = h * a_k`.
pub fn compute_h1<T: Denomination>(basis: &Basis<T>, cap: u32) -> Result<H1> {
    let h0 = compute_h0(basis)?;
    h1_from(basis, h0, cap)
}

fn h1_from<T: Denomination>(basis: &Basis<T>, h0: u32, cap: u32) -> Result<H1> {
    let mut table = MinStampTable::new(basis, T::zero())?;
    let mut worst = 0u32;
    let mut scanned = 0usize;
    for h in h0..=cap {
        // n(h) = h * a_k iff every value up to h * a_k needs at most h stamps.
        let bound = saturation(basis, h)?;
        table.extend_to(bound)?;
        let end = bound.index("h * a_k")?;
        worst = table.as_slice()[scanned + 1..=end]
            .iter()
            .fold(worst, |w, &m| w.max(m));
        scanned = end;
        if worst <= h {
            return Ok(H1::Found(h));
        }
    }
    Ok(H1::NotFoundWithinCap(cap))
}

/// The bound `max(h0, 2 h0 - 2)` on `h1` for symmetric bases.
pub fn theorem_bound(h0: u32) -> u32 {
    h0.max((2 * h0).saturating_sub(2))
}

/// Maps an `h0`-generation of `x < a_k` that avoids `a_k` to a generation of
/// `h0 * a_k - x` with exactly `h0` stamps.
///
/// Symmetry turns each `a_i` into `a_k - a_{k-i}`, so reversing the
/// coefficients over `a_1..a_{k-1}` and padding with `h0 - weight` copies of
/// `a_k` gives the reflected value.
pub fn reflect_generation<T: Denomination>(
    basis: &Basis<T>,
    gen: &Generation<T>,
    h0: u32,
) -> Result<Generation<T>> {
    if !is_symmetric(basis) {
        return Err(Error::NotSymmetric);
    }
    let k = basis.k();
    let c = gen.coefficients();
    if c.len() != k {
        return Err(Error::CoefficientCount {
            got: c.len(),
            expected: k,
        });
    }
    if c[k - 1] != 0 {
        return Err(Error::UsesTopElement);
    }
    if gen.value() >= basis.top() {
        return Err(Error::ValueNotBelowTop {
            value: gen.value().to_string(),
            top: basis.top().to_string(),
        });
    }
    if gen.weight() > h0 {
        return Err(Error::WeightExceedsH0 {
            weight: gen.weight(),
            h0,
        });
    }
    let mut reflected: Vec<u32> = c[..k - 1].iter().rev().copied().collect();
    reflected.push(h0 - gen.weight());
    Generation::from_coefficients(basis, reflected)
}

/// Everything the analysis says about one basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Denomination")]
pub struct BasisReport<T> {
    pub basis: Basis<T>,
    pub k: usize,
    pub symmetric: bool,
    pub h0: u32,
    /// `None` when no saturation was found up to the cap.
    pub h1: Option<u32>,
    pub h1_found: bool,
    pub theorem_bound: u32,
    pub conjecture_holds: bool,
    pub counterexample: bool,
}

/// Full report for `basis`. With `cap = None`, symmetric bases search up to
/// [`theorem_bound`] and other bases up to [`DEFAULT_H1_CAP`].
pub fn analyze<T: Denomination>(basis: &Basis<T>, cap: Option<u32>) -> Result<BasisReport<T>> {
    let symmetric = is_symmetric(basis);
    let h0 = compute_h0(basis)?;
    let bound = theorem_bound(h0);
    let cap = cap.unwrap_or(if symmetric { bound } else { DEFAULT_H1_CAP });
    let h1 = h1_from(basis, h0, cap)?.found();
    Ok(BasisReport {
        basis: basis.clone(),
        k: basis.k(),
        symmetric,
        h0,
        h1,
        h1_found: h1.is_some(),
        theorem_bound: bound,
        conjecture_holds: h1 == Some(h0),
        counterexample: symmetric && h1.is_some_and(|h| h > h0),
    })
}
