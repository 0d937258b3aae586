//! Integer lattice primitives: vectors, point sets, sumsets and pushes.
//!
//! A "push" of `S` in direction `u_i` is `S + {0, u_i} = S ∪ (S + u_i)`.
//! Pushes commute, so a sequence of pushes is described by a [`PushWord`]
//! holding one multiplicity per generator.

mod generators;
mod pointset;
mod vector;

use std::collections::VecDeque;

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

pub use generators::{maximal_minor_gcd, validate_generators, GeneratorSet};
pub use pointset::PointSet;
pub use vector::LatticeVector;

use crate::error::{Error, Result};

/// Multiplicity of each generator in a sequence of pushes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PushWord(pub Vec<u64>);

impl PushWord {
    pub fn zeros(k: usize) -> Self {
        PushWord(vec![0; k])
    }

    pub fn ones(k: usize) -> Self {
        PushWord(vec![1; k])
    }

    /// Counts the occurrences of each index in `0..k` in a sequence of indices.
    pub fn from_sequence(k: usize, sequence: &[usize]) -> Result<Self> {
        let mut counts = vec![0u64; k];
        for &i in sequence {
            *counts
                .get_mut(i)
                .ok_or(Error::IndexOutOfRange { index: i, count: k })? += 1;
        }
        Ok(PushWord(counts))
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }
}

/// `A + B = {a + b}`.
pub fn minkowski_sum(a: &PointSet, b: &PointSet) -> Result<PointSet> {
    a.check_same_dim(b)?;
    let mut out = PointSet::with_capacity(a.dim(), a.len().max(b.len()));
    for x in a.iter() {
        for y in b.iter() {
            out.insert_unchecked(x.checked_add(y)?);
        }
    }
    Ok(out)
}

/// The `n`-fold sumset `A + ... + A`; `{0}` when `n = 0`.
pub fn iterated_sumset(a: &PointSet, n: u64) -> Result<PointSet> {
    let mut acc = PointSet::origin(a.dim());
    for _ in 0..n {
        acc = minkowski_sum(&acc, a)?;
    }
    Ok(acc)
}

/// `S + {0, v}` for an arbitrary vector `v`.
pub fn push_vector(s: &PointSet, v: &LatticeVector) -> Result<PointSet> {
    let mut out = s.clone();
    push_in_place(&mut out, v)?;
    Ok(out)
}

/// Replaces `S` by `S + {0, v}`.
pub fn push_in_place(s: &mut PointSet, v: &LatticeVector) -> Result<()> {
    s.check_point(v)?;
    let mut fresh = Vec::new();
    for p in s.iter() {
        let q = p.checked_add(v)?;
        if !s.contains(&q) {
            fresh.push(q);
        }
    }
    for q in fresh {
        s.insert_unchecked(q);
    }
    Ok(())
}

/// `S_i = S + {0, u_i}`; `index` is zero-based.
pub fn push(s: &PointSet, index: usize, u: &GeneratorSet) -> Result<PointSet> {
    let g = u.get(index)?;
    push_vector(s, g)
}

/// `S + Σ_i counts_i · {0, u_i}`.
pub fn push_word(s: &PointSet, word: &PushWord, u: &GeneratorSet) -> Result<PointSet> {
    if word.0.len() != u.len() {
        return Err(Error::InvalidArgument(format!(
            "push word has {} counts for {} generators",
            word.0.len(),
            u.len()
        )));
    }
    let mut out = s.clone();
    for (i, &c) in word.0.iter().enumerate() {
        let g = u.get(i)?;
        for _ in 0..c {
            push_in_place(&mut out, g)?;
        }
    }
    Ok(out)
}

/// Applies pushes one at a time in the given order of zero-based indices.
pub fn push_sequence(s: &PointSet, sequence: &[usize], u: &GeneratorSet) -> Result<PointSet> {
    let mut out = s.clone();
    for &i in sequence {
        push_in_place(&mut out, u.get(i)?)?;
    }
    Ok(out)
}

pub fn translate(s: &PointSet, v: &LatticeVector) -> Result<PointSet> {
    s.check_point(v)?;
    let mut out = PointSet::with_capacity(s.dim(), s.len());
    for p in s.iter() {
        out.insert_unchecked(p.checked_add(v)?);
    }
    Ok(out)
}

/// The translate of `S` whose coordinate-wise minimum is the origin.
pub fn canonical_form(s: &PointSet) -> Result<PointSet> {
    let (lo, _) = s.bounding_box().ok_or(Error::EmptySet)?;
    let shift = LatticeVector::new(lo).checked_neg()?;
    translate(s, &shift)
}

/// Connected components of `S` under adjacency `b - a ∈ ±U`, ordered by
/// their lexicographically least point.
pub fn components(s: &PointSet, u: &GeneratorSet) -> Result<Vec<PointSet>> {
    if u.dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            found: s.dim(),
        });
    }
    let offsets = u.symmetric_offsets()?;
    let mut seen: FxHashSet<&LatticeVector> = FxHashSet::default();
    let mut out = Vec::new();
    let mut starts: Vec<&LatticeVector> = s.iter().collect();
    starts.sort_unstable();
    for start in starts {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = PointSet::empty(s.dim());
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            comp.insert_unchecked(p.clone());
            for off in &offsets {
                if let Some(q) = s.get(&p.checked_add(off)?) {
                    if seen.insert(q) {
                        queue.push_back(q);
                    }
                }
            }
        }
        out.push(comp);
    }
    Ok(out)
}
