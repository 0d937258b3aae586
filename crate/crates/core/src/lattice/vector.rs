use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A point of `Z^d`.
///
/// Coordinates are `i64`; every arithmetic operation is checked and reports
/// [`Error::Overflow`] instead of wrapping. Ordering is lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector(SmallVec<[i64; 4]>);

impl LatticeVector {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        LatticeVector(SmallVec::from_vec(coords.into()))
    }

    pub fn from_slice(coords: &[i64]) -> Self {
        LatticeVector(SmallVec::from_slice(coords))
    }

    pub fn zero(dim: usize) -> Self {
        LatticeVector(SmallVec::from_elem(0, dim))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    fn zip_checked(&self, other: &Self, op: fn(i64, i64) -> Option<i64>) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = SmallVec::with_capacity(self.0.len());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            out.push(op(a, b).ok_or(Error::Overflow)?);
        }
        Ok(LatticeVector(out))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_checked(other, i64::checked_add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_checked(other, i64::checked_sub)
    }

    pub fn checked_scale(&self, factor: i64) -> Result<Self> {
        self.0
            .iter()
            .map(|a| a.checked_mul(factor).ok_or(Error::Overflow))
            .collect::<Result<SmallVec<_>>>()
            .map(LatticeVector)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        self.checked_scale(-1)
    }

    /// Exact dot product with an `i128` accumulator.
    pub fn dot_i128(&self, other: &[i64]) -> i128 {
        self.0
            .iter()
            .zip(other)
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum()
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl From<&[i64]> for LatticeVector {
    fn from(c: &[i64]) -> Self {
        LatticeVector::from_slice(c)
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(c: Vec<i64>) -> Self {
        LatticeVector::new(c)
    }
}

impl<const N: usize> From<[i64; N]> for LatticeVector {
    fn from(c: [i64; N]) -> Self {
        LatticeVector::from_slice(&c)
    }
}
