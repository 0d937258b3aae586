use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::LatticeVector;
use crate::error::{Error, Result};
use crate::linalg::{determinant_i64, for_each_subset};

/// A validated generating set `u_1, ..., u_k` of `Z^d`.
///
/// Order is preserved so that directional quantities can be reported per
/// input index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    dim: usize,
    generators: Vec<LatticeVector>,
}

impl GeneratorSet {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of generators `k`.
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn get(&self, index: usize) -> Result<&LatticeVector> {
        self.generators.get(index).ok_or(Error::IndexOutOfRange {
            index,
            count: self.generators.len(),
        })
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LatticeVector> {
        self.generators.iter()
    }

    pub fn as_slice(&self) -> &[LatticeVector] {
        &self.generators
    }

    /// Largest absolute coordinate over all generators.
    pub fn max_abs(&self) -> i64 {
        self.generators
            .iter()
            .flat_map(|g| g.coords().iter())
            .map(|x| x.saturating_abs())
            .max()
            .unwrap_or(0)
    }

    /// The symmetric adjacency offsets `U ∪ -U`, deduplicated and sorted.
    pub fn symmetric_offsets(&self) -> Result<Vec<LatticeVector>> {
        let mut out = Vec::with_capacity(2 * self.len());
        for g in &self.generators {
            out.push(g.clone());
            out.push(g.checked_neg()?);
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl<'a> IntoIterator for &'a GeneratorSet {
    type Item = &'a LatticeVector;
    type IntoIter = std::slice::Iter<'a, LatticeVector>;
    fn into_iter(self) -> Self::IntoIter {
        self.generators.iter()
    }
}

/// Validates a candidate generating set of `Z^dim`.
///
/// Checks, in order: every vector has length `dim`, no vector is zero, no
/// vector repeats, and the gcd of all maximal minors of the `dim × k`
/// matrix is 1.
pub fn validate_generators<V: AsRef<[i64]>>(dim: usize, vectors: &[V]) -> Result<GeneratorSet> {
    if dim == 0 {
        return Err(Error::InvalidArgument(
            "dimension must be at least 1".into(),
        ));
    }
    if vectors.is_empty() {
        return Err(Error::InvalidArgument("generator list is empty".into()));
    }
    let mut generators: Vec<LatticeVector> = Vec::with_capacity(vectors.len());
    for (index, v) in vectors.iter().enumerate() {
        let v = v.as_ref();
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        let lv = LatticeVector::from_slice(v);
        if lv.is_zero() {
            return Err(Error::ZeroVector { index });
        }
        if let Some(first) = generators.iter().position(|g| *g == lv) {
            return Err(Error::DuplicateVector { index, first });
        }
        generators.push(lv);
    }
    let g = maximal_minor_gcd(dim, &generators);
    if !g.is_one() {
        return Err(Error::NotGenerating {
            dim,
            minor_gcd: g.to_string(),
        });
    }
    Ok(GeneratorSet { dim, generators })
}

/// gcd of all `dim × dim` minors of the matrix with the given columns; zero
/// when the columns have rank below `dim`. Stops as soon as the gcd hits 1.
pub fn maximal_minor_gcd(dim: usize, columns: &[LatticeVector]) -> BigInt {
    let mut g = BigInt::zero();
    for_each_subset(columns.len(), dim, |idx| {
        let rows: Vec<&[i64]> = idx.iter().map(|&i| columns[i].coords()).collect();
        // det(M^T) = det(M), so feeding columns as rows is fine
        let det = determinant_i64(&rows);
        g = g.gcd(&det);
        !g.is_one()
    });
    g
}
