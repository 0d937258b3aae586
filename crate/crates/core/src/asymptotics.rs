//! The asymptotic edge and vertex bounds and their comparison with `Z(t)`.
//!
//! The edge bound is `d·vol(Z)^{1/d}·n^{1-1/d}`, evaluated as
//! `d·(vol(Z)·n^{d-1})^{1/d}` so that a single root of an exact rational is
//! taken. Roots are truncated to [`crate::real::FRACTION_DIGITS`] decimals.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::boundary::edge_boundary_total;
use crate::error::{Error, Result};
use crate::exact::BoundaryTable;
use crate::hull::vertex_hull_volume;
use crate::lattice::GeneratorSet;
use crate::real::Real;
use crate::zonotope::{build_zonotope, lattice_point_count, lattice_points, zonotope_volume};

pub const CSV_HEADER: &str = "t,n,edge_boundary,telescoped,bound,ratio";

/// `d·(volume·n^{d-1})^{1/d}`.
pub fn bound_for_volume(volume: &BigRational, dim: usize, n: u64) -> Result<Real> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let d = u32::try_from(dim).map_err(|_| Error::Overflow)?;
    let radicand = volume * BigRational::from_integer(BigInt::from(n).pow(d - 1));
    Ok(Real::root_of_rational(&radicand, d).mul_integer(d))
}

/// `d·vol(Z)^{1/d}·n^{1-1/d}`.
pub fn edge_bound(u: &GeneratorSet, n: u64) -> Result<Real> {
    bound_for_volume(&zonotope_volume(u), u.dim(), n)
}

/// `d·vol(conv(U ∪ {0}))^{1/d}·n^{1-1/d}`.
pub fn vertex_bound(u: &GeneratorSet, n: u64) -> Result<Real> {
    bound_for_volume(&vertex_hull_volume(u)?, u.dim(), n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompareRow {
    pub t: u64,
    /// `|Z(t)|`.
    pub n: u64,
    /// `∂(Z(t))`.
    pub edge_boundary: u64,
    /// `|Z(t+1)| - |Z(t)|`.
    pub telescoped: u64,
    pub bound: Real,
    /// `edge_boundary / bound`.
    pub ratio: Real,
}

fn compare_row(u: &GeneratorSet, z: &crate::zonotope::Zonotope, t: u64) -> Result<CompareRow> {
    let set = lattice_points(z, t)?;
    let n = set.len() as u64;
    let edge = edge_boundary_total(&set, u)?;
    drop(set);
    let telescoped = lattice_point_count(z, t + 1)? - n;
    if edge > telescoped {
        return Err(Error::UpperBoundChainViolated {
            t,
            edge_boundary: edge,
            telescoped,
        });
    }
    let bound = bound_for_volume(z.volume(), u.dim(), n)?;
    let ratio = Real::from_integer(edge)
        .checked_div(&bound)
        .ok_or(Error::DegenerateHull)?;
    Ok(CompareRow {
        t,
        n,
        edge_boundary: edge,
        telescoped,
        bound,
        ratio,
    })
}

/// One row per `t = 1..=t_max`, computed in parallel and returned in order of
/// `t`. Fails with [`Error::UpperBoundChainViolated`] if some row has
/// `∂(Z(t)) > |Z(t+1)| - |Z(t)|`.
pub fn compare_report(u: &GeneratorSet, t_max: u64) -> Result<Vec<CompareRow>> {
    if t_max == 0 {
        return Err(Error::InvalidArgument("t_max must be at least 1".into()));
    }
    let z = build_zonotope(u)?;
    (1..=t_max)
        .into_par_iter()
        .map(|t| compare_row(u, &z, t))
        .collect()
}

pub fn to_csv(rows: &[CompareRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.t,
            r.n,
            r.edge_boundary,
            r.telescoped,
            r.bound.format(12),
            r.ratio.format(12)
        ));
    }
    out
}

/// Tolerance band for `ratio(t)`. There is no known convergence rate, so
/// the band is a setting rather than a constant.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RatioBand {
    pub lo: f64,
    pub hi: f64,
}

impl Default for RatioBand {
    fn default() -> Self {
        RatioBand { lo: 0.85, hi: 1.15 }
    }
}

impl RatioBand {
    pub fn contains(&self, ratio: &Real) -> bool {
        let r = ratio.to_f64();
        self.lo <= r && r <= self.hi
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BandReport {
    pub band: RatioBand,
    /// Rows with `t` at least this value are expected in the band.
    pub from_t: u64,
    pub outside: Vec<u64>,
    /// Least-squares slope of `|ratio - 1|` against `t` over the checked rows.
    pub deviation_slope: f64,
}

impl BandReport {
    pub fn passed(&self) -> bool {
        self.outside.is_empty()
    }
}

/// Least-squares slope of `|ratio - 1|` against `t`; negative when the
/// ratios approach 1.
pub fn deviation_slope(rows: &[CompareRow]) -> f64 {
    if rows.len() < 2 {
        return 0.0;
    }
    let one = Real::from_integer(1);
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r.t as f64, r.ratio.sub(&one).abs().to_f64()))
        .collect();
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// Checks the rows with `t ≥ from_t` against `band`.
pub fn band_report(rows: &[CompareRow], band: RatioBand, from_t: u64) -> BandReport {
    let checked: Vec<CompareRow> = rows.iter().filter(|r| r.t >= from_t).cloned().collect();
    BandReport {
        band,
        from_t,
        outside: checked
            .iter()
            .filter(|r| !band.contains(&r.ratio))
            .map(|r| r.t)
            .collect(),
        deviation_slope: deviation_slope(&checked),
    }
}

/// Band check over the upper half of the tested range of `t`.
pub fn upper_half_band_report(rows: &[CompareRow], band: RatioBand) -> BandReport {
    let t_max = rows.iter().map(|r| r.t).max().unwrap_or(0);
    band_report(rows, band, t_max / 2 + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub t: u64,
    /// `|Z(t)|`.
    pub size: usize,
    /// `∂(Z(t))`.
    pub boundary: u64,
    /// `∂*(|Z(t)|)` from the table.
    pub optimum: u64,
    pub optimal: bool,
}

/// Whether `Z(t)` attains the tabulated optimum for its size.
pub fn optimality_probe(u: &GeneratorSet, table: &BoundaryTable, t: u64) -> Result<ProbeReport> {
    let z = build_zonotope(u)?;
    let set = lattice_points(&z, t)?;
    let optimum = table.optimum(set.len())?;
    let boundary = edge_boundary_total(&set, u)?;
    Ok(ProbeReport {
        t,
        size: set.len(),
        boundary,
        optimum,
        optimal: boundary == optimum,
    })
}

/// `(n, ∂*(n), edge bound at n)` for every size in the table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlotPoint {
    pub n: usize,
    pub optimum: u64,
    pub bound: Real,
}

pub fn plot_data(u: &GeneratorSet, table: &BoundaryTable) -> Result<Vec<PlotPoint>> {
    let volume = zonotope_volume(u);
    table
        .entries
        .iter()
        .map(|(&n, e)| {
            Ok(PlotPoint {
                n,
                optimum: e.optimum,
                bound: bound_for_volume(&volume, u.dim(), n as u64)?,
            })
        })
        .collect()
}
