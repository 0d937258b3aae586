//! Seeded property suite over random point sets and the dilates `Z(t)`.
//!
//! Random sets are drawn from a ChaCha stream, so a failure is reproduced by
//! its seed and sample index alone; the failing inputs are recorded as well.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::boundary::{
    directional_boundary, edge_boundary_total, line_classes, lines, split_sides,
    staged_push_increments, vertex_boundary,
};
use crate::error::Result;
use crate::lattice::{
    components, minkowski_sum, push_sequence, push_word, translate, validate_generators,
    GeneratorSet, LatticeVector, PointSet, PushWord,
};
use crate::zonotope::{
    build_zonotope, ehrhart, lattice_point_count, lattice_points, recurrence_check, z0, Zonotope,
};

/// Edge boundary used by the suite; replaceable to test the suite itself.
pub type EdgeBoundaryFn = fn(&PointSet, &GeneratorSet) -> Result<u64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub seed: u64,
    pub samples: usize,
    pub max_size: usize,
    /// Random coordinates lie in `[-coord_range, coord_range]`.
    pub coord_range: i64,
    /// Dilates `Z(1..=t_max)` are used for the structural properties.
    pub t_max: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 42,
            samples: 500,
            max_size: 40,
            coord_range: 10,
            t_max: 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reproducer {
    pub seed: u64,
    /// Index of the random sample, or `t` for structural properties.
    pub case: u64,
    pub set: PointSet,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    /// First failing case.
    pub failure: Option<Reproducer>,
}

impl PropertyResult {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub seed: u64,
    pub properties: Vec<PropertyResult>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyResult> {
        self.properties.iter().filter(|p| !p.ok())
    }
}

struct Tally {
    result: PropertyResult,
    seed: u64,
}

impl Tally {
    fn new(name: &'static str, seed: u64) -> Self {
        Tally {
            result: PropertyResult {
                name,
                passed: 0,
                total: 0,
                failure: None,
            },
            seed,
        }
    }

    fn record(&mut self, case: u64, set: &PointSet, outcome: Result<Option<String>>) {
        self.result.total += 1;
        let failure = match outcome {
            Ok(None) => {
                self.result.passed += 1;
                return;
            }
            Ok(Some(detail)) => detail,
            Err(e) => format!("error: {e}"),
        };
        if self.result.failure.is_none() {
            self.result.failure = Some(Reproducer {
                seed: self.seed,
                case,
                set: set.clone(),
                detail: failure,
            });
        }
    }
}

fn random_point(rng: &mut ChaCha8Rng, dim: usize, range: i64) -> LatticeVector {
    LatticeVector::new(
        (0..dim)
            .map(|_| rng.gen_range(-range..=range))
            .collect::<Vec<_>>(),
    )
}

/// The `samples` random sets of the suite, in order.
pub fn random_sets(dim: usize, cfg: &CheckConfig) -> Vec<PointSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let cells = (2 * cfg.coord_range + 1).saturating_pow(dim as u32) as usize;
    (0..cfg.samples)
        .map(|_| {
            let size = rng.gen_range(0..=cfg.max_size).min(cells);
            let mut s = PointSet::with_capacity(dim, size);
            while s.len() < size {
                s.insert_unchecked(random_point(&mut rng, dim, cfg.coord_range));
            }
            s
        })
        .collect()
}

fn fail_if(cond: bool, detail: impl FnOnce() -> String) -> Option<String> {
    cond.then(detail)
}

const RANDOM_PROPERTIES: [&str; 8] = [
    "vertex-edge sandwich",
    "split identity",
    "telescoping pushes",
    "push order independence",
    "translation invariance",
    "component additivity",
    "line class lower bound",
    "zonotope superset minimality",
];

type Outcome = Result<Option<String>>;

/// Outcomes of the randomized properties on one sample, in the order of
/// [`RANDOM_PROPERTIES`]. Auxiliary choices come from the sample's own
/// stream, so samples can run in any order.
fn sample_outcomes(
    u: &GeneratorSet,
    s: &PointSet,
    case: u64,
    cfg: &CheckConfig,
    edge: EdgeBoundaryFn,
    z0_set: &PointSet,
    unit: &PointSet,
) -> Vec<Outcome> {
    let dim = u.dim();
    let k = u.len() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9e37_79b9_7f4a_7c15);
    rng.set_stream(case);

    let sandwich = (|| {
        let e = edge(s, u)?;
        let v = vertex_boundary(s, u)?;
        Ok(fail_if(!(v <= e && e <= k * v), || {
            format!("vertex {v}, edge {e}, k {k}")
        }))
    })();

    let mut t_part = PointSet::empty(dim);
    let mut tp_part = PointSet::empty(dim);
    for p in s.sorted() {
        if rng.gen_bool(0.5) {
            t_part.insert_unchecked(p);
        } else {
            tp_part.insert_unchecked(p);
        }
    }
    let j = rng.gen_range(0..u.len());
    let split = split_sides(&t_part, &tp_part, j, u).map(|(lhs, rhs)| {
        fail_if(lhs != rhs, || {
            format!("direction {j}, T = {t_part:?}: {lhs} != {rhs}")
        })
    });

    let telescope = (|| {
        let staged: u64 = staged_push_increments(s, u)?.iter().sum();
        let direct = (minkowski_sum(s, z0_set)?.len() - s.len()) as u64;
        Ok(fail_if(staged != direct, || {
            format!("staged {staged}, |S + Z_0| - |S| = {direct}")
        }))
    })();

    let word = PushWord((0..u.len()).map(|_| rng.gen_range(0..=2)).collect());
    let mut sequence: Vec<usize> = word
        .counts()
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat_n(i, c as usize))
        .collect();
    sequence.shuffle(&mut rng);
    let order = (|| {
        let a = push_word(s, &word, u)?;
        let b = push_sequence(s, &sequence, u)?;
        Ok(fail_if(a != b, || format!("sequence {sequence:?}")))
    })();

    let shift = random_point(&mut rng, dim, cfg.coord_range);
    let translation = (|| {
        let moved = translate(s, &shift)?;
        let before = (edge(s, u)?, vertex_boundary(s, u)?);
        let after = (edge(&moved, u)?, vertex_boundary(&moved, u)?);
        Ok(fail_if(before != after, || {
            format!("shift {shift:?}: {before:?} -> {after:?}")
        }))
    })();

    let additivity = (|| {
        let whole = edge(s, u)?;
        let parts = components(s, u)?
            .iter()
            .map(|c| edge(c, u))
            .sum::<Result<u64>>()?;
        Ok(fail_if(whole != parts, || {
            format!("whole {whole}, sum over components {parts}")
        }))
    })();

    let line_bound = (|| {
        for i in 0..u.len() {
            let d = directional_boundary(s, i, u)?;
            let l = line_classes(s, i, u)?;
            if d < l {
                return Ok(Some(format!("direction {i}: {d} < {l} lines")));
            }
        }
        Ok(None)
    })();

    let superset = (|| {
        let big = unit.union(s)?;
        let (a, b) = (edge(&big, u)?, edge(unit, u)?);
        Ok(fail_if(a < b, || {
            format!("∂(Z(1) ∪ S) = {a} < ∂(Z(1)) = {b}")
        }))
    })();

    vec![
        sandwich,
        split,
        telescope,
        order,
        translation,
        additivity,
        line_bound,
        superset,
    ]
}

pub fn run_checks(u: &GeneratorSet, cfg: &CheckConfig) -> Result<CheckReport> {
    run_checks_with(u, cfg, edge_boundary_total)
}

/// Runs the suite with `edge` standing in for the edge boundary.
pub fn run_checks_with(
    u: &GeneratorSet,
    cfg: &CheckConfig,
    edge: EdgeBoundaryFn,
) -> Result<CheckReport> {
    let dim = u.dim();
    let sets = random_sets(dim, cfg);
    let z0_set = z0(u)?;
    let z = build_zonotope(u)?;
    let unit = lattice_points(&z, 1)?;
    let seed = cfg.seed;
    let outcomes: Vec<Vec<Outcome>> = sets
        .par_iter()
        .enumerate()
        .map(|(i, s)| sample_outcomes(u, s, i as u64, cfg, edge, &z0_set, &unit))
        .collect();
    let mut tallies: Vec<Tally> = RANDOM_PROPERTIES
        .iter()
        .map(|name| Tally::new(name, seed))
        .collect();
    for (i, (s, outs)) in sets.iter().zip(outcomes).enumerate() {
        for (tally, outcome) in tallies.iter_mut().zip(outs) {
            tally.record(i as u64, s, outcome);
        }
    }
    let mut properties: Vec<PropertyResult> = tallies.into_iter().map(|t| t.result).collect();
    properties.extend(structural(u, &z, cfg, edge)?);
    Ok(CheckReport { seed, properties })
}

fn structural(
    u: &GeneratorSet,
    z: &Zonotope,
    cfg: &CheckConfig,
    edge: EdgeBoundaryFn,
) -> Result<Vec<PropertyResult>> {
    let seed = cfg.seed;
    let mut recurrence = Tally::new("dilate recurrence", seed);
    let mut intervals = Tally::new("line classes of dilates", seed);
    let mut chain = Tally::new("upper-bound chain", seed);
    let mut vertex_growth = Tally::new("dilate vertex growth", seed);
    let mut ehrhart_check = Tally::new("Ehrhart consistency", seed);

    let z0_set = z0(u)?;
    let step_gens: Vec<Vec<i64>> = z0_set
        .sorted()
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.coords().to_vec())
        .collect();
    let steps = validate_generators(u.dim(), &step_gens)?;

    for t in 1..=cfg.t_max {
        let zt = lattice_points(z, t)?;
        let next = lattice_point_count(z, t + 1)?;
        let growth = next - zt.len() as u64;

        recurrence.record(
            t,
            &zt,
            recurrence_check(u, t).map(|ok| fail_if(!ok, || format!("t = {t}"))),
        );
        intervals.record(
            t,
            &zt,
            (|| {
                for i in 0..u.len() {
                    let d = directional_boundary(&zt, i, u)?;
                    let ls = lines(&zt, i, u)?;
                    if d != ls.len() as u64 {
                        return Ok(Some(format!("direction {i}: {d} != {} lines", ls.len())));
                    }
                    if let Some(bad) = ls.iter().find(|l| !l.is_interval()) {
                        return Ok(Some(format!(
                            "direction {i}: line through {:?} is not an interval",
                            bad.representative
                        )));
                    }
                }
                Ok(None)
            })(),
        );
        chain.record(
            t,
            &zt,
            edge(&zt, u).map(|e| fail_if(e > growth, || format!("∂(Z({t})) = {e} > {growth}"))),
        );
        vertex_growth.record(
            t,
            &zt,
            vertex_boundary(&zt, &steps)
                .map(|v| fail_if(v != growth, || format!("vertex boundary {v} != {growth}"))),
        );
    }

    let origin = PointSet::origin(u.dim());
    ehrhart_check.record(
        0,
        &origin,
        (|| {
            let poly = ehrhart(z)?;
            let d = u.dim() as u64;
            for t in d + 1..=d + 3 {
                let direct = lattice_point_count(z, t)?;
                let predicted = poly.evaluate(t);
                if predicted != num_rational::BigRational::from_integer(direct.into()) {
                    return Ok(Some(format!(
                        "t = {t}: predicted {predicted}, counted {direct}"
                    )));
                }
            }
            Ok(None)
        })(),
    );

    Ok(vec![
        recurrence.result,
        intervals.result,
        chain.result,
        vertex_growth.result,
        ehrhart_check.result,
    ])
}
