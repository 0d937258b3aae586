//! Exact minimum edge boundary `∂*(n)` for small `n`.
//!
//! Edge boundary is additive over `±U`-connected components, so
//! `∂*(n) = min(best connected n-set, min_m ∂*(m) + ∂*(n - m))`. Connected
//! sets come from [`enumerate`]; disconnected optima are stored as unions of
//! smaller witnesses placed far apart.

mod enumerate;
mod grid;
mod oracle;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use enumerate::{enumerate_connected, for_each_connected};
pub use oracle::{brute_force_oracle, brute_force_oracle_with_budget, DEFAULT_ORACLE_NODES};

use crate::boundary::edge_boundary;
use crate::error::{Error, Result};
use crate::lattice::{canonical_form, translate, GeneratorSet, LatticeVector, PointSet};

/// Limits for the connected-set search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest set size the search accepts.
    pub n_max: usize,
    /// Cap on visited search nodes before [`Error::BudgetExceeded`].
    pub node_budget: u64,
    /// Split the search tree into independent tasks at this depth.
    pub split_depth: usize,
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            n_max: 10,
            node_budget: 200_000_000,
            split_depth: 2,
            parallel: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub optimum: u64,
    pub witness: PointSet,
}

/// `n -> (∂*(n), witness)` for `n = 1..=N`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BoundaryTable {
    pub entries: BTreeMap<usize, TableEntry>,
}

/// A failed table invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableViolation {
    NotMonotone { n: usize },
    NotSubadditive { m: usize, n: usize },
    WitnessMismatch { n: usize, recomputed: u64 },
    WrongWitnessSize { n: usize, size: usize },
}

impl BoundaryTable {
    pub fn optimum(&self, n: usize) -> Result<u64> {
        self.entries
            .get(&n)
            .map(|e| e.optimum)
            .ok_or(Error::SizeNotInTable { size: n })
    }

    pub fn get(&self, n: usize) -> Option<&TableEntry> {
        self.entries.get(&n)
    }

    pub fn max_n(&self) -> usize {
        self.entries.keys().next_back().copied().unwrap_or(0)
    }

    pub fn optima(&self) -> Vec<u64> {
        self.entries.values().map(|e| e.optimum).collect()
    }

    pub fn monotonicity_violations(&self) -> Vec<TableViolation> {
        self.entries
            .iter()
            .filter_map(|(&n, e)| {
                let prev = self.entries.get(&(n + 1))?;
                (prev.optimum < e.optimum).then_some(TableViolation::NotMonotone { n })
            })
            .collect()
    }

    pub fn subadditivity_violations(&self) -> Vec<TableViolation> {
        let mut out = Vec::new();
        for (&m, a) in &self.entries {
            for (&n, b) in self.entries.range(m..) {
                if let Some(sum) = self.entries.get(&(m + n)) {
                    if sum.optimum > a.optimum + b.optimum {
                        out.push(TableViolation::NotSubadditive { m, n });
                    }
                }
            }
        }
        out
    }

    pub fn witness_violations(&self, u: &GeneratorSet) -> Result<Vec<TableViolation>> {
        let mut out = Vec::new();
        for (&n, e) in &self.entries {
            if e.witness.len() != n {
                out.push(TableViolation::WrongWitnessSize {
                    n,
                    size: e.witness.len(),
                });
            }
            let recomputed = edge_boundary(&e.witness, u)?.total;
            if recomputed != e.optimum {
                out.push(TableViolation::WitnessMismatch { n, recomputed });
            }
        }
        Ok(out)
    }

    /// All invariant violations: monotonicity, subadditivity, witnesses.
    pub fn violations(&self, u: &GeneratorSet) -> Result<Vec<TableViolation>> {
        let mut v = self.monotonicity_violations();
        v.extend(self.subadditivity_violations());
        v.extend(self.witness_violations(u)?);
        Ok(v)
    }
}

/// `A ∪ (B + shift)` with the shift along the first coordinate large enough
/// that no generator joins the two parts.
fn far_apart_union(a: &PointSet, b: &PointSet, u: &GeneratorSet) -> Result<PointSet> {
    let (_, a_hi) = a.bounding_box().ok_or(Error::EmptySet)?;
    let (b_lo, _) = b.bounding_box().ok_or(Error::EmptySet)?;
    let mut shift = vec![0i64; a.dim()];
    shift[0] = a_hi[0] - b_lo[0] + u.max_abs() + 1;
    let moved = translate(b, &LatticeVector::new(shift))?;
    canonical_form(&a.union(&moved)?)
}

/// Exact `∂*(n)` for `n = 1..=n_max` with lexicographically least canonical
/// witnesses.
#[allow(clippy::needless_range_loop)]
pub fn exact_table(u: &GeneratorSet, n_max: usize, config: &SearchConfig) -> Result<BoundaryTable> {
    let connected = enumerate::best_connected(u, n_max, config)?;
    let mut table = BoundaryTable::default();
    for n in 1..=n_max {
        let mut best: Option<(u64, Vec<LatticeVector>, PointSet)> = None;
        let mut offer = |value: u64, witness: PointSet| {
            let key = witness.sorted();
            let better = match &best {
                None => true,
                Some((b, k, _)) => (value, &key) < (*b, k),
            };
            if better {
                best = Some((value, key, witness));
            }
        };
        if let Some((boundary, pts)) = &connected[n] {
            offer(
                *boundary as u64,
                PointSet::from_points(u.dim(), pts.iter().cloned())?,
            );
        }
        for m in 1..n {
            let (a, b) = (&table.entries[&m], &table.entries[&(n - m)]);
            offer(
                a.optimum + b.optimum,
                far_apart_union(&a.witness, &b.witness, u)?,
            );
        }
        let (optimum, _, witness) = best.expect("n = 1 always has a connected witness");
        table.entries.insert(n, TableEntry { optimum, witness });
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::validate_generators;

    fn l1() -> GeneratorSet {
        validate_generators(2, &[[1, 0], [-1, 0], [0, 1], [0, -1]]).unwrap()
    }

    #[test]
    fn l1_first_values() {
        let t = exact_table(&l1(), 6, &SearchConfig::default()).unwrap();
        assert_eq!(t.optima(), vec![4, 6, 8, 8, 10, 10]);
        assert!(t.violations(&l1()).unwrap().is_empty());
        assert_eq!(
            t.get(4).unwrap().witness,
            PointSet::from_points(2, [[0, 0], [0, 1], [1, 0], [1, 1]]).unwrap()
        );
    }

    #[test]
    fn single_entry_table() {
        let t = exact_table(&l1(), 1, &SearchConfig::default()).unwrap();
        assert_eq!(t.optimum(1).unwrap(), 4);
        assert_eq!(t.optimum(2).unwrap_err(), Error::SizeNotInTable { size: 2 });
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"1":{"optimum":4,"witness":[[0,0]]}}"#
        );
    }

    #[test]
    fn long_steps_in_one_dimension() {
        let u = validate_generators(1, &[[2], [3]]).unwrap();
        let t = exact_table(&u, 5, &SearchConfig::default()).unwrap();
        assert!(t.violations(&u).unwrap().is_empty());
        // {0, 2} and {0, 3} both keep one of the four edges inside
        assert_eq!(t.optimum(1).unwrap(), 2);
        assert_eq!(t.optimum(2).unwrap(), 3);
    }

    #[test]
    fn table_round_trips_through_json() {
        let t = exact_table(&l1(), 4, &SearchConfig::default()).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        let back: BoundaryTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn violations_are_detected() {
        let mut t = exact_table(&l1(), 4, &SearchConfig::default()).unwrap();
        t.entries.get_mut(&2).unwrap().optimum = 9;
        let v = t.violations(&l1()).unwrap();
        assert!(v.contains(&TableViolation::NotMonotone { n: 2 }));
        assert!(v.contains(&TableViolation::WitnessMismatch {
            n: 2,
            recomputed: 6
        }));
        assert!(v.contains(&TableViolation::NotSubadditive { m: 1, n: 1 }));
    }
}
