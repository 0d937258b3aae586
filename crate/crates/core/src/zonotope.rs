//! The zonotope `Z = Σ_i [0, u_i]` of a generating set, its integer dilates
//! `Z(t) = (t·Z) ∩ Z^d`, and the Ehrhart polynomial counting them.
//!
//! Facets come from `(d-1)`-subsets of generators: every facet of a zonotope
//! is parallel to a hyperplane spanned by generators, so the primitive
//! normals of those hyperplanes are exactly the facet normals. Support values
//! along a normal `n` are `Σ max(0, n·u_i)` and `Σ min(0, n·u_i)`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{push_word, GeneratorSet, LatticeVector, PointSet, PushWord};
use crate::linalg::{cross_product, determinant_i64, for_each_subset, primitive_normalized};

/// A pair of parallel supporting hyperplanes `lower ≤ n·x ≤ upper`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub upper: i64,
    pub lower: i64,
}

#[derive(Clone, Debug)]
pub struct Zonotope {
    generators: GeneratorSet,
    facets: Vec<Facet>,
    volume: BigRational,
}

impl Zonotope {
    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.dim()
    }

    /// Facet pairs, one per normal direction up to sign.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Number of facets of the polytope (two per stored normal pair; two
    /// endpoints in dimension one).
    pub fn facet_count(&self) -> usize {
        2 * self.facets.len()
    }

    pub fn volume(&self) -> &BigRational {
        &self.volume
    }

    /// Per-coordinate extent `[Σ min(0, u_ij), Σ max(0, u_ij)]` of `Z`.
    pub fn coordinate_range(&self, j: usize) -> (i64, i64) {
        self.generators.iter().fold((0i64, 0i64), |(lo, hi), g| {
            let x = g.coords()[j];
            (lo + x.min(0), hi + x.max(0))
        })
    }
}

fn support_values(normal: &[i64], u: &GeneratorSet) -> Result<(i64, i64)> {
    let mut upper = 0i128;
    let mut lower = 0i128;
    for g in u {
        let p = g.dot_i128(normal);
        upper += p.max(0);
        lower += p.min(0);
    }
    Ok((
        i64::try_from(upper).map_err(|_| Error::Overflow)?,
        i64::try_from(lower).map_err(|_| Error::Overflow)?,
    ))
}

/// `Z_0 = {0, u_1} + ... + {0, u_k}`.
pub fn z0(u: &GeneratorSet) -> Result<PointSet> {
    push_word(&PointSet::origin(u.dim()), &PushWord::ones(u.len()), u)
}

/// Volume `Σ |det(u_{i_1}, ..., u_{i_d})|` over all `d`-subsets of generators.
pub fn zonotope_volume(u: &GeneratorSet) -> BigRational {
    let mut total = BigInt::zero();
    let gens = u.as_slice();
    for_each_subset(gens.len(), u.dim(), |idx| {
        let rows: Vec<&[i64]> = idx.iter().map(|&i| gens[i].coords()).collect();
        total += determinant_i64(&rows).abs();
        true
    });
    BigRational::from_integer(total)
}

pub fn build_zonotope(u: &GeneratorSet) -> Result<Zonotope> {
    let dim = u.dim();
    let volume = zonotope_volume(u);
    if volume.is_zero() {
        return Err(Error::DegenerateDimension {
            rank: crate::linalg::rank(
                &u.iter()
                    .map(|g| g.coords().iter().map(|&x| BigInt::from(x)).collect())
                    .collect::<Vec<_>>(),
            ),
            dim,
        });
    }
    let mut normals: BTreeSet<Vec<i64>> = BTreeSet::new();
    if dim == 1 {
        normals.insert(vec![1]);
    } else {
        let gens: Vec<Vec<BigInt>> = u
            .iter()
            .map(|g| g.coords().iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut overflow = false;
        for_each_subset(gens.len(), dim - 1, |idx| {
            let vs: Vec<&[BigInt]> = idx.iter().map(|&i| gens[i].as_slice()).collect();
            if let Some(n) = primitive_normalized(&cross_product(&vs, dim)) {
                match n.iter().map(|x| x.to_i64()).collect::<Option<Vec<i64>>>() {
                    Some(n) => {
                        normals.insert(n);
                    }
                    None => overflow = true,
                }
            }
            !overflow
        });
        if overflow {
            return Err(Error::Overflow);
        }
    }
    let facets = normals
        .into_iter()
        .map(|normal| {
            let (upper, lower) = support_values(&normal, u)?;
            Ok(Facet {
                normal,
                upper,
                lower,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Zonotope {
        generators: u.clone(),
        facets,
        volume,
    })
}

fn contains_coords(z: &Zonotope, t: i128, v: &[i64]) -> bool {
    z.facets.iter().all(|f| {
        let p: i128 = f
            .normal
            .iter()
            .zip(v)
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum();
        t * f.lower as i128 <= p && p <= t * f.upper as i128
    })
}

/// Whether `v ∈ t·Z`.
pub fn contains(z: &Zonotope, t: u64, v: &LatticeVector) -> Result<bool> {
    if v.dim() != z.dim() {
        return Err(Error::DimensionMismatch {
            expected: z.dim(),
            found: v.dim(),
        });
    }
    Ok(contains_coords(z, t as i128, v.coords()))
}

fn dilated_ranges(z: &Zonotope, t: u64) -> Result<Vec<(i64, i64)>> {
    let ti = i64::try_from(t).map_err(|_| Error::Overflow)?;
    (0..z.dim())
        .map(|j| {
            let (lo, hi) = z.coordinate_range(j);
            Ok((
                lo.checked_mul(ti).ok_or(Error::Overflow)?,
                hi.checked_mul(ti).ok_or(Error::Overflow)?,
            ))
        })
        .collect()
}

/// Visits the points of `t·Z` whose first coordinate is `x0`.
fn scan_slice(z: &Zonotope, t: u64, ranges: &[(i64, i64)], x0: i64, mut visit: impl FnMut(&[i64])) {
    let dim = ranges.len();
    let mut cur: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    cur[0] = x0;
    loop {
        if contains_coords(z, t as i128, &cur) {
            visit(&cur);
        }
        // odometer over coordinates 1..dim
        let mut j = dim;
        loop {
            j -= 1;
            if j == 0 {
                return;
            }
            if cur[j] < ranges[j].1 {
                cur[j] += 1;
                break;
            }
            cur[j] = ranges[j].0;
        }
    }
}

/// `Z(t) = (t·Z) ∩ Z^d` by scanning the coordinate bounding box of `t·Z`.
pub fn lattice_points(z: &Zonotope, t: u64) -> Result<PointSet> {
    let ranges = dilated_ranges(z, t)?;
    let slices: Vec<Vec<LatticeVector>> = (ranges[0].0..=ranges[0].1)
        .into_par_iter()
        .map(|x0| {
            let mut found = Vec::new();
            scan_slice(z, t, &ranges, x0, |p| {
                found.push(LatticeVector::from_slice(p))
            });
            found
        })
        .collect();
    let total: usize = slices.iter().map(Vec::len).sum();
    let mut out = PointSet::with_capacity(z.dim(), total);
    for p in slices.into_iter().flatten() {
        out.insert(p)?;
    }
    Ok(out)
}

/// `|Z(t)|` without storing the points.
pub fn lattice_point_count(z: &Zonotope, t: u64) -> Result<u64> {
    let ranges = dilated_ranges(z, t)?;
    Ok((ranges[0].0..=ranges[0].1)
        .into_par_iter()
        .map(|x0| {
            let mut count = 0u64;
            scan_slice(z, t, &ranges, x0, |_| count += 1);
            count
        })
        .sum())
}

/// `Σ a_i t^i` with exact rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartPolynomial {
    pub coefficients: Vec<BigRational>,
}

impl EhrhartPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn leading(&self) -> &BigRational {
        self.coefficients.last().expect("non-empty polynomial")
    }

    pub fn evaluate(&self, t: u64) -> BigRational {
        let t = BigRational::from_integer(BigInt::from(t));
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &t + c)
    }
}

impl fmt::Display for EhrhartPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = !a.is_one() || i == 0;
            if show_coeff {
                if a.is_integer() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "({a})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Interpolates the polynomial through `(x, values[x])` for `x = 0..len`
/// using Newton's forward differences.
pub fn interpolate(values: &[BigRational]) -> Vec<BigRational> {
    let n = values.len();
    let mut diffs = values.to_vec();
    let mut newton = Vec::with_capacity(n);
    for _ in 0..n {
        newton.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    // Σ_j Δ^j f(0) · t(t-1)...(t-j+1)/j!
    let mut coeffs = vec![BigRational::zero(); n.max(1)];
    let mut falling = vec![BigRational::one()];
    let mut factorial = BigRational::one();
    for (j, delta) in newton.iter().enumerate() {
        if j > 0 {
            factorial *= BigRational::from_integer(BigInt::from(j));
        }
        let scale = delta / &factorial;
        for (i, c) in falling.iter().enumerate() {
            coeffs[i] += c * &scale;
        }
        let shift = BigRational::from_integer(BigInt::from(j));
        let mut next = vec![BigRational::zero(); falling.len() + 1];
        for (i, c) in falling.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &shift;
        }
        falling = next;
    }
    coeffs
}

/// Fits the Ehrhart polynomial through `|Z(t)|`, `t = 0..d`, and checks the
/// leading coefficient against the volume.
pub fn ehrhart(z: &Zonotope) -> Result<EhrhartPolynomial> {
    let values = (0..=z.dim() as u64)
        .map(|t| {
            Ok(BigRational::from_integer(BigInt::from(
                lattice_points(z, t)?.len(),
            )))
        })
        .collect::<Result<Vec<_>>>()?;
    let poly = EhrhartPolynomial {
        coefficients: interpolate(&values),
    };
    if poly.leading() != z.volume() {
        return Err(Error::LeadingCoefficientMismatch {
            leading: poly.leading().to_string(),
            volume: z.volume().to_string(),
        });
    }
    Ok(poly)
}

/// Checks `Z(t) + Z_0 = Z(t+1)` and `(Z ∩ Z^d) + t Z_0 = Z(t+1)`.
///
/// Sumsets with `Z_0` and `t Z_0` are formed as pushes: `t Z_0` is the sum of
/// the sets `t{0, u_i}`, so adding it is pushing `t` times along each generator.
pub fn recurrence_check(u: &GeneratorSet, t: u64) -> Result<bool> {
    let z = build_zonotope(u)?;
    let next = lattice_points(&z, t + 1)?;
    let grown = push_word(&lattice_points(&z, t)?, &PushWord::ones(u.len()), u)?;
    if grown != next {
        return Ok(false);
    }
    let from_unit = push_word(&lattice_points(&z, 1)?, &PushWord(vec![t; u.len()]), u)?;
    Ok(from_unit == next)
}
