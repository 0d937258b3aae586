//! Enumeration of connected point sets up to translation.
//!
//! This is Redelmeier's polyomino counting scheme on the graph with
//! adjacency `±U`: every translation class of connected sets has exactly one
//! member whose lexicographically least point is the origin, so the search
//! grows sets from the origin through cells that come after it in
//! lexicographic order, keeping an untried set and a reached mark per cell so
//! that each set is produced once.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::grid::Grid;
use super::SearchConfig;
use crate::error::{Error, Result};
use crate::lattice::{GeneratorSet, LatticeVector, PointSet};

pub(crate) trait Visitor {
    fn visit(&mut self, grid: &Grid, cells: &[usize], boundary: i64);
}

#[derive(Clone)]
struct Frame {
    cells: Vec<usize>,
    in_set: Vec<bool>,
    reached: Vec<bool>,
    boundary: i64,
}

struct Task {
    frame: Frame,
    untried: Vec<usize>,
}

struct Engine<'a> {
    grid: Grid,
    out_nb: Vec<Vec<Option<usize>>>,
    in_nb: Vec<Vec<Option<usize>>>,
    n: usize,
    budget: u64,
    nodes: &'a AtomicU64,
}

impl<'a> Engine<'a> {
    fn new(u: &GeneratorSet, n: usize, budget: u64, nodes: &'a AtomicU64) -> Result<Self> {
        let reach = (n as i64 + 1)
            .checked_mul(u.max_abs())
            .ok_or(Error::Overflow)?;
        let grid = Grid::new(u.dim(), reach)?;
        Ok(Engine {
            out_nb: grid.neighbor_table(u, 1),
            in_nb: grid.neighbor_table(u, -1),
            grid,
            n,
            budget,
            nodes,
        })
    }

    fn root(&self) -> (Frame, Vec<usize>) {
        let mut reached = vec![false; self.grid.len];
        reached[self.grid.origin] = true;
        let frame = Frame {
            cells: Vec::with_capacity(self.n),
            in_set: vec![false; self.grid.len],
            reached,
            boundary: 0,
        };
        (frame, vec![self.grid.origin])
    }

    fn tick(&self) -> Result<()> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Change in edge boundary when `c` joins the set.
    fn delta(&self, f: &Frame, c: usize) -> i64 {
        let leaving = self.out_nb[c]
            .iter()
            .filter(|nb| !nb.is_some_and(|x| f.in_set[x]))
            .count() as i64;
        let absorbed = self.in_nb[c]
            .iter()
            .filter(|nb| nb.is_some_and(|x| f.in_set[x]))
            .count() as i64;
        leaving - absorbed
    }

    fn explore<V: Visitor>(
        &self,
        f: &mut Frame,
        mut untried: Vec<usize>,
        visitor: &mut V,
        mut tasks: Option<&mut Vec<Task>>,
        split_depth: usize,
    ) -> Result<()> {
        while let Some(c) = untried.pop() {
            self.tick()?;
            let saved = f.boundary;
            f.boundary += self.delta(f, c);
            f.in_set[c] = true;
            f.cells.push(c);
            visitor.visit(&self.grid, &f.cells, f.boundary);
            if f.cells.len() < self.n {
                let mut added = Vec::new();
                for &nb in self.out_nb[c].iter().chain(&self.in_nb[c]).flatten() {
                    if nb > self.grid.origin && !f.reached[nb] {
                        f.reached[nb] = true;
                        added.push(nb);
                    }
                }
                let mut child = untried.clone();
                child.extend_from_slice(&added);
                match tasks.as_deref_mut() {
                    Some(list) if f.cells.len() == split_depth => list.push(Task {
                        frame: f.clone(),
                        untried: child,
                    }),
                    _ => self.explore(f, child, visitor, tasks.as_deref_mut(), split_depth)?,
                }
                for nb in added {
                    f.reached[nb] = false;
                }
            }
            f.cells.pop();
            f.in_set[c] = false;
            f.boundary = saved;
        }
        Ok(())
    }
}

/// Calls `visit` with every connected `n`-point set, one per translation
/// class, in canonical form.
pub fn for_each_connected(
    u: &GeneratorSet,
    n: usize,
    config: &SearchConfig,
    mut visit: impl FnMut(PointSet),
) -> Result<()> {
    check_size(n, config)?;
    struct Exact<F> {
        n: usize,
        dim: usize,
        visit: F,
    }
    impl<F: FnMut(PointSet)> Visitor for Exact<F> {
        fn visit(&mut self, grid: &Grid, cells: &[usize], _boundary: i64) {
            if cells.len() == self.n {
                let mut s = PointSet::with_capacity(self.dim, cells.len());
                for p in grid.canonical(cells) {
                    s.insert_unchecked(p);
                }
                (self.visit)(s);
            }
        }
    }
    let nodes = AtomicU64::new(0);
    let engine = Engine::new(u, n, config.node_budget, &nodes)?;
    let (mut frame, untried) = engine.root();
    let mut visitor = Exact {
        n,
        dim: u.dim(),
        visit: &mut visit,
    };
    engine.explore(&mut frame, untried, &mut visitor, None, 0)
}

/// All connected `n`-point sets up to translation, in canonical form.
pub fn enumerate_connected(
    u: &GeneratorSet,
    n: usize,
    config: &SearchConfig,
) -> Result<Vec<PointSet>> {
    let mut out = Vec::new();
    for_each_connected(u, n, config, |s| out.push(s))?;
    Ok(out)
}

fn check_size(n: usize, config: &SearchConfig) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("set size must be at least 1".into()));
    }
    if n > config.n_max {
        return Err(Error::InvalidArgument(format!(
            "set size {n} exceeds the configured maximum {}",
            config.n_max
        )));
    }
    Ok(())
}

/// Minimum boundary and lexicographically least canonical witness.
pub(crate) type Best = (i64, Vec<LatticeVector>);

#[derive(Clone)]
struct BestPerSize {
    best: Vec<Option<Best>>,
}

impl BestPerSize {
    fn new(n: usize) -> Self {
        BestPerSize {
            best: vec![None; n + 1],
        }
    }

    fn offer(&mut self, size: usize, candidate: Best) {
        let slot = &mut self.best[size];
        if slot.as_ref().is_none_or(|b| candidate < *b) {
            *slot = Some(candidate);
        }
    }

    fn merge(mut self, other: BestPerSize) -> Self {
        for (size, b) in other.best.into_iter().enumerate() {
            if let Some(b) = b {
                self.offer(size, b);
            }
        }
        self
    }
}

impl Visitor for BestPerSize {
    fn visit(&mut self, grid: &Grid, cells: &[usize], boundary: i64) {
        let size = cells.len();
        if self.best[size].as_ref().is_some_and(|(b, _)| boundary > *b) {
            return;
        }
        self.offer(size, (boundary, grid.canonical(cells)));
    }
}

/// Minimum edge boundary over connected sets of each size `1..=n`, with the
/// lexicographically least canonical witness attaining it.
pub(crate) fn best_connected(
    u: &GeneratorSet,
    n: usize,
    config: &SearchConfig,
) -> Result<Vec<Option<Best>>> {
    check_size(n, config)?;
    let nodes = AtomicU64::new(0);
    let engine = Engine::new(u, n, config.node_budget, &nodes)?;
    let (mut frame, untried) = engine.root();
    let mut top = BestPerSize::new(n);
    if !config.parallel || config.split_depth == 0 {
        engine.explore(&mut frame, untried, &mut top, None, 0)?;
        return Ok(top.best);
    }
    let mut tasks = Vec::new();
    engine.explore(
        &mut frame,
        untried,
        &mut top,
        Some(&mut tasks),
        config.split_depth,
    )?;
    let partials = tasks
        .into_par_iter()
        .map(|mut task| {
            let mut local = BestPerSize::new(n);
            engine.explore(&mut task.frame, task.untried, &mut local, None, 0)?;
            Ok(local)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(partials.into_iter().fold(top, BestPerSize::merge).best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::validate_generators;

    fn l1() -> GeneratorSet {
        validate_generators(2, &[[1, 0], [-1, 0], [0, 1], [0, -1]]).unwrap()
    }

    #[test]
    fn fixed_polyomino_counts() {
        let cfg = SearchConfig::default();
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_connected(&l1(), n, &cfg).unwrap().len())
            .collect();
        // fixed polyominoes: 1, 2, 6, 19, 63, 216
        assert_eq!(counts, vec![1, 2, 6, 19, 63, 216]);
    }

    #[test]
    fn sets_are_canonical_and_distinct() {
        let sets = enumerate_connected(&l1(), 4, &SearchConfig::default()).unwrap();
        let mut keys: Vec<Vec<LatticeVector>> = sets.iter().map(PointSet::sorted).collect();
        for s in &sets {
            assert_eq!(s.len(), 4);
            assert_eq!(crate::lattice::canonical_form(s).unwrap(), *s);
        }
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 19);
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = SearchConfig {
            node_budget: 10,
            ..SearchConfig::default()
        };
        assert_eq!(
            enumerate_connected(&l1(), 5, &cfg).unwrap_err(),
            Error::BudgetExceeded { budget: 10 }
        );
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let seq = SearchConfig {
            parallel: false,
            ..SearchConfig::default()
        };
        let par = SearchConfig::default();
        assert_eq!(
            best_connected(&l1(), 7, &seq).unwrap(),
            best_connected(&l1(), 7, &par).unwrap()
        );
    }
}
