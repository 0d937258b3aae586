use std::fmt;

use rustc_hash::FxHashSet;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::LatticeVector;
use crate::error::{Error, Result};

/// A finite subset of `Z^d`.
///
/// Equality is set equality. Iteration order is unspecified; use
/// [`PointSet::sorted`] wherever order is observable.
#[derive(Clone)]
pub struct PointSet {
    dim: usize,
    points: FxHashSet<LatticeVector>,
}

impl PointSet {
    pub fn empty(dim: usize) -> Self {
        PointSet {
            dim,
            points: FxHashSet::default(),
        }
    }

    pub fn with_capacity(dim: usize, capacity: usize) -> Self {
        let mut points = FxHashSet::default();
        points.reserve(capacity);
        PointSet { dim, points }
    }

    /// `{0}` in dimension `dim`.
    pub fn origin(dim: usize) -> Self {
        let mut s = Self::empty(dim);
        s.points.insert(LatticeVector::zero(dim));
        s
    }

    /// Builds a set from points, dropping repeats and rejecting wrong dimensions.
    pub fn from_points<I, P>(dim: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = P>,
        P: Into<LatticeVector>,
    {
        let mut s = Self::empty(dim);
        for p in points {
            s.insert(p.into())?;
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, v: &LatticeVector) -> bool {
        self.points.contains(v)
    }

    pub fn get(&self, v: &LatticeVector) -> Option<&LatticeVector> {
        self.points.get(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &LatticeVector> + '_ {
        self.points.iter()
    }

    /// Points in lexicographic order.
    pub fn sorted(&self) -> Vec<LatticeVector> {
        let mut v: Vec<LatticeVector> = self.points.iter().cloned().collect();
        v.sort_unstable();
        v
    }

    /// Inserts a point; returns whether it was new.
    pub fn insert(&mut self, v: LatticeVector) -> Result<bool> {
        self.check_point(&v)?;
        Ok(self.points.insert(v))
    }

    pub(crate) fn insert_unchecked(&mut self, v: LatticeVector) -> bool {
        debug_assert_eq!(v.dim(), self.dim);
        self.points.insert(v)
    }

    pub fn check_point(&self, v: &LatticeVector) -> Result<()> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.dim(),
            });
        }
        Ok(())
    }

    pub fn check_same_dim(&self, other: &PointSet) -> Result<()> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn union(&self, other: &PointSet) -> Result<PointSet> {
        self.check_same_dim(other)?;
        let mut out = self.clone();
        out.points.extend(other.points.iter().cloned());
        Ok(out)
    }

    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.points.is_disjoint(&other.points)
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.dim == other.dim && self.points.is_subset(&other.points)
    }

    /// Coordinate-wise minimum and maximum; `None` for the empty set.
    pub fn bounding_box(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        let mut it = self.points.iter();
        let first = it.next()?;
        let mut lo = first.coords().to_vec();
        let mut hi = lo.clone();
        for p in it {
            for (j, &x) in p.coords().iter().enumerate() {
                lo[j] = lo[j].min(x);
                hi[j] = hi[j].max(x);
            }
        }
        Some((lo, hi))
    }
}

impl PartialEq for PointSet {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.points == other.points
    }
}

impl Eq for PointSet {}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.sorted()).finish()
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.sorted().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let points: Vec<Vec<i64>> = Vec::deserialize(deserializer)?;
        let dim = points
            .first()
            .map(Vec::len)
            .ok_or_else(|| D::Error::custom("cannot infer the dimension of an empty point set"))?;
        PointSet::from_points(dim, points.iter().map(|p| LatticeVector::from_slice(p)))
            .map_err(D::Error::custom)
    }
}
