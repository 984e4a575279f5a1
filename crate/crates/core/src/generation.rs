use serde::{Deserialize, Serialize};

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::num::Denomination;

/// A representation `value = sum(c_i * a_i)` using `weight = sum(c_i)` stamps.
///
/// Coefficients are stored in basis order, so `coefficients()[i]` counts
/// copies of `basis.elements()[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generation<T> {
    coefficients: Vec<u32>,
    value: T,
    weight: u32,
}

impl<T: Denomination> Generation<T> {
    /// Builds a generation from coefficients, computing its value and weight.
    pub fn from_coefficients(basis: &Basis<T>, coefficients: Vec<u32>) -> Result<Self> {
        if coefficients.len() != basis.k() {
            return Err(Error::CoefficientCount {
                got: coefficients.len(),
                expected: basis.k(),
            });
        }
        let mut value = T::zero();
        let mut weight = 0u32;
        for (&c, &a) in coefficients.iter().zip(basis.elements()) {
            let term = T::from_count(c, "generation value")?.mul_or(a, "generation value")?;
            value = value.add_or(term, "generation value")?;
            weight = weight.checked_add(c).ok_or(Error::Overflow {
                what: "generation weight",
            })?;
        }
        Ok(Self {
            coefficients,
            value,
            weight,
        })
    }

    /// The generation of zero: no stamps at all.
    pub fn empty(basis: &Basis<T>) -> Self {
        Self {
            coefficients: vec![0; basis.k()],
            value: T::zero(),
            weight: 0,
        }
    }

    pub fn coefficients(&self) -> &[u32] {
        &self.coefficients
    }

    pub fn value(&self) -> T {
        self.value
    }

    /// Number of stamps used.
    pub fn weight(&self) -> u32 {
        self.weight
    }
}
