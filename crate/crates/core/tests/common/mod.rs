//! Test-only oracles, written independently of the library code paths.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use isolat_core::{validate_generators, GeneratorSet};

pub fn l1(dim: usize) -> GeneratorSet {
    let mut gens = Vec::new();
    for j in 0..dim {
        for s in [1, -1] {
            let mut v = vec![0i64; dim];
            v[j] = s;
            gens.push(v);
        }
    }
    validate_generators(dim, &gens).unwrap()
}

pub fn linf(dim: usize) -> GeneratorSet {
    let mut gens = Vec::new();
    let total = 3usize.pow(dim as u32);
    for code in 0..total {
        let mut c = code;
        let v: Vec<i64> = (0..dim)
            .map(|_| {
                let x = (c % 3) as i64 - 1;
                c /= 3;
                x
            })
            .collect();
        if v.iter().any(|&x| x != 0) {
            gens.push(v);
        }
    }
    validate_generators(dim, &gens).unwrap()
}

pub fn triangular() -> GeneratorSet {
    validate_generators(2, &[[1, 0], [-1, 0], [0, 1], [0, -1], [1, 1], [-1, -1]]).unwrap()
}

pub fn asymmetric() -> GeneratorSet {
    validate_generators(2, &[[2, 1], [1, 1], [-1, 0], [0, -1]]).unwrap()
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `Σ |det|` over generator pairs or triples, with hand-written determinants.
pub fn det_sum_volume(u: &GeneratorSet) -> i64 {
    let g: Vec<&[i64]> = u.iter().map(|v| v.coords()).collect();
    let k = g.len();
    let mut total = 0i64;
    match u.dim() {
        1 => g.iter().map(|v| v[0].abs()).sum(),
        2 => {
            for a in 0..k {
                for b in a + 1..k {
                    total += (g[a][0] * g[b][1] - g[a][1] * g[b][0]).abs();
                }
            }
            total
        }
        3 => {
            for a in 0..k {
                for b in a + 1..k {
                    for c in b + 1..k {
                        let (x, y, z) = (g[a], g[b], g[c]);
                        let det = x[0] * (y[1] * z[2] - y[2] * z[1])
                            - x[1] * (y[0] * z[2] - y[2] * z[0])
                            + x[2] * (y[0] * z[1] - y[1] * z[0]);
                        total += det.abs();
                    }
                }
            }
            total
        }
        _ => unimplemented!("oracle covers d <= 3"),
    }
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Twice the area of the convex hull of planar points (monotone chain plus
/// shoelace).
pub fn shoelace_double_area(points: &[(i64, i64)]) -> i64 {
    let mut pts: Vec<(i64, i64)> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return 0;
    }
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(i64, i64)>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2
                && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    let n = hull.len();
    (0..n)
        .map(|i| {
            let (a, b) = (hull[i], hull[(i + 1) % n]);
            a.0 * b.1 - a.1 * b.0
        })
        .sum::<i64>()
        .abs()
}

/// The subset sums `Z_0`, by brute force over all `2^k` subsets.
pub fn subset_sums(u: &GeneratorSet) -> BTreeSet<Vec<i64>> {
    let k = u.len();
    assert!(k <= 20);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << k) {
        let mut v = vec![0i64; u.dim()];
        for (i, g) in u.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for (x, y) in v.iter_mut().zip(g.coords()) {
                    *x += y;
                }
            }
        }
        out.insert(v);
    }
    out
}

/// Whether `Σ α_i u_i = v` has a solution with `0 ≤ α_i ≤ t`, decided by a
/// phase-one simplex in exact rationals with Bland's rule.
#[allow(clippy::needless_range_loop)]
pub fn lp_member(u: &GeneratorSet, t: i64, v: &[i64]) -> bool {
    let d = u.dim();
    let k = u.len();
    // Variables: α_0..α_k, slack s_0..s_k, artificial a_0..a_{d+k}.
    // Rows: Σ α_i u_ij = v_j (d rows); α_i + s_i = t (k rows).
    let rows = d + k;
    let n_struct = 2 * k;
    let cols = n_struct + rows;
    let mut a: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); cols + 1]; rows];
    for j in 0..d {
        for (i, g) in u.iter().enumerate() {
            a[j][i] = rat(g.coords()[j]);
        }
        a[j][cols] = rat(v[j]);
    }
    for i in 0..k {
        a[d + i][i] = BigRational::one();
        a[d + i][k + i] = BigRational::one();
        a[d + i][cols] = rat(t);
    }
    for (r, row) in a.iter_mut().enumerate() {
        if row[cols].is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
        row[n_struct + r] = BigRational::one();
    }
    let mut basis: Vec<usize> = (0..rows).map(|r| n_struct + r).collect();
    // Objective: minimize the sum of artificials; reduced costs over all columns.
    loop {
        let mut reduced = vec![BigRational::zero(); cols];
        for c in 0..cols {
            let cost = if c >= n_struct {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            let mut z = BigRational::zero();
            for r in 0..rows {
                if basis[r] >= n_struct {
                    z += &a[r][c];
                }
            }
            reduced[c] = cost - z;
        }
        let Some(enter) = (0..cols).find(|&c| reduced[c].is_negative()) else {
            break;
        };
        let mut leave: Option<(BigRational, usize, usize)> = None;
        for r in 0..rows {
            if a[r][enter].is_positive() {
                let ratio = &a[r][cols] / &a[r][enter];
                let better = match &leave {
                    None => true,
                    Some((best, _, var)) => ratio < *best || (ratio == *best && basis[r] < *var),
                };
                if better {
                    leave = Some((ratio, r, basis[r]));
                }
            }
        }
        let (_, pr, _) = leave.expect("phase one objective is bounded below");
        let pivot = a[pr][enter].clone();
        for x in a[pr].iter_mut() {
            *x /= &pivot;
        }
        for r in 0..rows {
            if r != pr && !a[r][enter].is_zero() {
                let f = a[r][enter].clone();
                for c in 0..=cols {
                    let delta = &f * &a[pr][c];
                    a[r][c] -= delta;
                }
            }
        }
        basis[pr] = enter;
    }
    (0..rows).all(|r| basis[r] < n_struct || a[r][cols].is_zero())
}

/// Whether the columns generate `Z^d`, by Hermite-style row reduction of the
/// `d × k` matrix with integer column operations.
#[allow(clippy::needless_range_loop)]
pub fn generates_by_reduction(dim: usize, vectors: &[Vec<i64>]) -> bool {
    let mut m: Vec<Vec<i128>> = (0..dim)
        .map(|j| vectors.iter().map(|v| v[j] as i128).collect())
        .collect();
    let k = vectors.len();
    for (pivot_col, row) in (0..dim).enumerate() {
        // Euclid on the entries m[row][pivot_col..] via column operations.
        loop {
            let nonzero: Vec<usize> = (pivot_col..k).filter(|&c| m[row][c] != 0).collect();
            if nonzero.is_empty() {
                return false;
            }
            let smallest = *nonzero.iter().min_by_key(|&&c| m[row][c].abs()).unwrap();
            if nonzero.len() == 1 {
                for r in 0..dim {
                    m[r].swap(pivot_col, smallest);
                }
                break;
            }
            for &c in &nonzero {
                if c != smallest {
                    let q = m[row][c] / m[row][smallest];
                    for r in 0..dim {
                        m[r][c] -= q * m[r][smallest];
                    }
                }
            }
        }
        if m[row][pivot_col].abs() != 1 {
            return false;
        }
    }
    true
}

/// Minimum edge boundary over every `n`-subset of `[0, side)^d`, by plain
/// subset enumeration.
pub fn tiny_exhaustive_minimum(u: &GeneratorSet, n: usize, side: i64) -> u64 {
    let d = u.dim();
    let cells: Vec<Vec<i64>> = (0..side.pow(d as u32))
        .map(|mut c| {
            (0..d)
                .map(|_| {
                    let x = c % side;
                    c /= side;
                    x
                })
                .collect()
        })
        .collect();
    let mut best = u64::MAX;
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        cells: &[Vec<i64>],
        u: &GeneratorSet,
        n: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        best: &mut u64,
    ) {
        if chosen.len() == n {
            let set: BTreeSet<&Vec<i64>> = chosen.iter().map(|&i| &cells[i]).collect();
            let mut e = 0u64;
            for p in &set {
                for g in u {
                    let q: Vec<i64> = p.iter().zip(g.coords()).map(|(a, b)| a + b).collect();
                    if !set.contains(&q) {
                        e += 1;
                    }
                }
            }
            *best = (*best).min(e);
            return;
        }
        for i in start..cells.len() {
            chosen.push(i);
            rec(cells, u, n, i + 1, chosen, best);
            chosen.pop();
        }
    }
    rec(&cells, u, n, 0, &mut chosen, &mut best);
    best
}
