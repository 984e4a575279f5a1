//! Stamp bases `{1, a_2, ..., a_k}` and their text format.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::num::Denomination;

/// A validated basis: strictly increasing positive denominations starting at 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Basis<T> {
    elements: Vec<T>,
}

impl<T: Denomination> Basis<T> {
    pub fn new(elements: Vec<T>) -> Result<Self> {
        let first = *elements.first().ok_or(Error::Empty)?;
        if let Some(zero) = elements.iter().find(|e| e.is_zero()) {
            return Err(Error::NonPositive(zero.to_string()));
        }
        if !first.is_one() {
            return Err(Error::NotStartingAtOne(first.to_string()));
        }
        if let Some(i) = elements.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing { position: i + 1 });
        }
        Ok(Self { elements })
    }

    /// Parse the comma-separated text format, e.g. `"1, 3, 6, 10"`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Empty);
        }
        let elements = text
            .split(',')
            .map(|item| parse_element::<T>(item.trim()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(elements)
    }

    /// The unary basis `{1}`.
    pub fn unit() -> Self {
        Self {
            elements: vec![T::one()],
        }
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    /// Number of denominations.
    pub fn k(&self) -> usize {
        self.elements.len()
    }

    /// The largest denomination `a_k`.
    pub fn top(&self) -> T {
        *self.elements.last().expect("basis is never empty")
    }

    /// Consecutive differences, taking `a_0 = 0`.
    pub fn differences(&self) -> Vec<T> {
        let mut prev = T::zero();
        self.elements
            .iter()
            .map(|&e| {
                let d = e - prev;
                prev = e;
                d
            })
            .collect()
    }

    /// Same elements in a different unsigned width.
    pub fn convert<U: Denomination>(&self) -> Result<Basis<U>> {
        let elements = self
            .elements
            .iter()
            .map(|e| {
                U::from(*e).ok_or(Error::Overflow {
                    what: "basis element",
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Basis { elements })
    }
}

fn parse_element<T: Denomination>(item: &str) -> Result<T> {
    let wide: i128 = item
        .parse()
        .map_err(|_| Error::InvalidNumber(item.to_string()))?;
    if wide <= 0 {
        return Err(Error::NonPositive(item.to_string()));
    }
    T::from_i128(wide).ok_or(Error::Overflow {
        what: "basis element",
    })
}

impl<T: Denomination> FromStr for Basis<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl<T: fmt::Display> fmt::Display for Basis<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl<T: Denomination> TryFrom<Vec<T>> for Basis<T> {
    type Error = Error;

    fn try_from(elements: Vec<T>) -> Result<Self> {
        Self::new(elements)
    }
}

// Serialized in the text format so JSON records stay flat.
impl<T: fmt::Display> Serialize for Basis<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de, T: Denomination> Deserialize<'de> for Basis<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        Basis::parse(&text).map_err(serde::de::Error::custom)
    }
}
