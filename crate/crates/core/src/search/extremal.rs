//! Exhaustive search for extremal `h`-bases with `k` elements.

use serde::{Deserialize, Serialize};

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::num::Denomination;
use crate::table::cover;

/// Default refusal threshold on the size of the raw search space.
pub const DEFAULT_CANDIDATE_CEILING: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Denomination")]
pub struct ExtremalResult<T> {
    pub h: u32,
    pub k: usize,
    pub ak_ceiling: T,
    /// Largest cover attained in the search space.
    pub n_star: T,
    /// Every basis attaining `n_star`, in lexicographic order.
    pub witnesses: Vec<Basis<T>>,
}

fn binomial(n: u128, r: u128) -> Option<u128> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 1..=r {
        acc = acc.checked_mul(n - r + i)? / i;
    }
    Some(acc)
}

struct Search<T> {
    h: u32,
    k: usize,
    ceiling: T,
    best: T,
    witnesses: Vec<Basis<T>>,
}

impl<T: Denomination> Search<T> {
    fn descend(&mut self, prefix: &mut Vec<T>, prefix_cover: T) -> Result<()> {
        if prefix.len() == self.k {
            let basis = Basis::new(prefix.clone())?;
            if prefix_cover > self.best {
                self.best = prefix_cover;
                self.witnesses.clear();
            }
            if prefix_cover == self.best {
                self.witnesses.push(basis);
            }
            return Ok(());
        }
        // An element above cover + 1 leaves cover + 1 unreachable, so the
        // basis cannot beat one that places cover + 1 there instead.
        let last = *prefix.last().expect("prefix starts with 1");
        let hi = prefix_cover
            .checked_add(&T::one())
            .unwrap_or(self.ceiling)
            .min(self.ceiling);
        let remaining = T::from_usize(self.k - prefix.len() - 1).expect("small");
        let mut a = last + T::one();
        while a <= hi && a.checked_add(&remaining).is_some_and(|t| t <= self.ceiling) {
            prefix.push(a);
            let basis = Basis::new(prefix.clone())?;
            let c = cover(&basis, self.h)?;
            self.descend(prefix, c)?;
            prefix.pop();
            a = a + T::one();
        }
        Ok(())
    }
}

/// Searches all bases `{1, a_2, ..., a_k}` with `a_k <= ak_ceiling` for the
/// largest cover at `h` stamps, refusing spaces larger than `candidate_ceiling`.
///
/// Without an explicit `ak_ceiling`, the extremal value `n*` for `k - 1` is
/// computed first and `n* + 1` is used, since a larger `a_k` would leave
/// `n* + 1` uncovered.
pub fn search_extremal_with_ceiling<T: Denomination>(
    h: u32,
    k: usize,
    ak_ceiling: Option<T>,
    candidate_ceiling: u128,
) -> Result<ExtremalResult<T>> {
    if h == 0 {
        return Err(Error::ZeroStamps);
    }
    if k == 0 {
        return Err(Error::BadParameter("k must be at least 1".into()));
    }
    let ceiling = match ak_ceiling {
        Some(c) => c,
        None if k == 1 => T::one(),
        None => {
            let prev = search_extremal_with_ceiling::<T>(h, k - 1, None, candidate_ceiling)?;
            prev.n_star.add_or(T::one(), "extremal ceiling")?
        }
    };
    let span = ceiling
        .to_u128()
        .expect("unsigned fits u128")
        .saturating_sub(1);
    let count = binomial(span, k as u128 - 1).unwrap_or(u128::MAX);
    if count > candidate_ceiling {
        return Err(Error::TooLarge {
            count,
            ceiling: candidate_ceiling,
        });
    }
    if ceiling.to_usize().is_some_and(|c| c < k) {
        return Err(Error::BadParameter(format!(
            "ceiling {ceiling} leaves no room for {k} distinct elements"
        )));
    }
    let mut search = Search {
        h,
        k,
        ceiling,
        best: T::zero(),
        witnesses: Vec::new(),
    };
    let mut prefix = vec![T::one()];
    let unit = cover(&Basis::unit(), h)?;
    search.descend(&mut prefix, unit)?;
    Ok(ExtremalResult {
        h,
        k,
        ak_ceiling: ceiling,
        n_star: search.best,
        witnesses: search.witnesses,
    })
}

pub fn search_extremal<T: Denomination>(
    h: u32,
    k: usize,
    ak_ceiling: Option<T>,
) -> Result<ExtremalResult<T>> {
    search_extremal_with_ceiling(h, k, ak_ceiling, DEFAULT_CANDIDATE_CEILING)
}
