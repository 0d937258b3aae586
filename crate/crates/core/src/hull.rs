//! Exact volume of the convex hull of a finite integer point set.
//!
//! Facets are found by brute force over `d`-subsets of points (a hyperplane
//! through them with every point on one side). The volume is a fan of
//! pyramids from a fixed point of the set over every facet; each facet's
//! `(d-1)`-volume is computed recursively after projecting out one
//! coordinate where the facet normal is nonzero.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{GeneratorSet, LatticeVector};
use crate::linalg::{cross_product, dot, for_each_subset, primitive_normalized};

/// Volume of `conv(points)` in `R^d`. Fails with [`Error::DegenerateHull`]
/// if the points do not span `R^d`.
pub fn hull_volume(points: &[LatticeVector]) -> Result<BigRational> {
    let dim = points.first().ok_or(Error::DegenerateHull)?.dim();
    let mut pts: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
            Ok(p.coords().iter().map(|&x| BigInt::from(x)).collect())
        })
        .collect::<Result<_>>()?;
    pts.sort();
    pts.dedup();
    volume_rec(&pts, dim)
}

/// `vol(conv(U ∪ {0}))`.
pub fn vertex_hull_volume(u: &GeneratorSet) -> Result<BigRational> {
    let mut pts: Vec<LatticeVector> = u.iter().cloned().collect();
    pts.push(LatticeVector::zero(u.dim()));
    hull_volume(&pts)
}

/// Supporting hyperplanes `n·x ≤ b` containing at least `dim` affinely
/// independent points, with primitive outward normals.
fn facets(pts: &[Vec<BigInt>], dim: usize) -> Vec<(Vec<BigInt>, BigInt)> {
    let mut found: BTreeSet<(Vec<BigInt>, BigInt)> = BTreeSet::new();
    for_each_subset(pts.len(), dim, |idx| {
        let base = &pts[idx[0]];
        let diffs: Vec<Vec<BigInt>> = idx[1..]
            .iter()
            .map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let refs: Vec<&[BigInt]> = diffs.iter().map(Vec::as_slice).collect();
        let Some(mut n) = primitive_normalized(&cross_product(&refs, dim)) else {
            return true;
        };
        let mut b = dot(&n, base);
        let (mut above, mut below) = (false, false);
        for p in pts {
            let v = dot(&n, p);
            above |= v > b;
            below |= v < b;
        }
        if above && below {
            return true;
        }
        if above {
            n.iter_mut().for_each(|x| *x = -x.clone());
            b = -b;
        }
        found.insert((n, b));
        true
    });
    found.into_iter().collect()
}

fn volume_rec(pts: &[Vec<BigInt>], dim: usize) -> Result<BigRational> {
    if dim == 1 {
        let lo = pts
            .iter()
            .map(|p| &p[0])
            .min()
            .ok_or(Error::DegenerateHull)?;
        let hi = pts
            .iter()
            .map(|p| &p[0])
            .max()
            .ok_or(Error::DegenerateHull)?;
        if lo == hi {
            return Err(Error::DegenerateHull);
        }
        return Ok(BigRational::from_integer(hi - lo));
    }
    if pts.len() <= dim {
        return Err(Error::DegenerateHull);
    }
    let fs = facets(pts, dim);
    if fs.is_empty() {
        return Err(Error::DegenerateHull);
    }
    let apex = &pts[0];
    let mut total = BigRational::zero();
    for (n, b) in fs {
        let height = (&b - dot(&n, apex)).abs();
        if height.is_zero() {
            continue;
        }
        let j = n.iter().position(|x| !x.is_zero()).expect("nonzero normal");
        let projected: Vec<Vec<BigInt>> = pts
            .iter()
            .filter(|p| dot(&n, p) == b)
            .map(|p| {
                p.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let area = volume_rec(&projected, dim - 1)?;
        total += area * BigRational::new(height, BigInt::from(dim) * n[j].abs());
    }
    if total.is_zero() {
        return Err(Error::DegenerateHull);
    }
    Ok(total)
}
