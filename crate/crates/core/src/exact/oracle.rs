//! Exhaustive minimum edge boundary over all `n`-subsets of a box.
//!
//! The origin is fixed as the lexicographically least point of the set, so
//! the remaining points range over box cells after the origin in
//! lexicographic order. Subsets are enumerated as increasing index
//! sequences. Cells skipped or left behind by the sequence are known
//! non-members, so edges into them are final; the search prunes when those
//! final edges plus a lower bound for the last point already reach the best
//! value found. The last point `w` of any set has every edge `w -> w + u`
//! with `u` lexicographically positive leaving the set, which gives that
//! bound.
//!
//! Connectivity and component decomposition are never used, so the result
//! is an independent check on the exact table. It is exact whenever some
//! optimal set has a translate inside the box with its least point at the
//! origin; a radius of `n · max|u_ij|` suffices.

use super::grid::Grid;
use crate::error::{Error, Result};
use crate::lattice::GeneratorSet;

/// Default cap on explored search nodes.
pub const DEFAULT_ORACLE_NODES: u64 = 100_000_000;

struct Search {
    n: usize,
    len: usize,
    out_nb: Vec<Vec<Option<usize>>>,
    in_nb: Vec<Vec<Option<usize>>>,
    positive: u64,
    member: Vec<bool>,
    chosen: Vec<usize>,
    best: u64,
    nodes: u64,
    budget: u64,
}

impl Search {
    /// Edges from the chosen cells into `cell`, which is becoming a known non-member.
    fn incoming(&self, cell: usize) -> u64 {
        self.in_nb[cell]
            .iter()
            .filter(|nb| nb.is_some_and(|x| self.member[x]))
            .count() as u64
    }

    /// Edges from `cell` to cells that are out of the box or earlier and unchosen.
    fn outgoing_settled(&self, cell: usize) -> u64 {
        self.out_nb[cell]
            .iter()
            .filter(|nb| match nb {
                None => true,
                Some(x) => *x < cell && !self.member[*x],
            })
            .count() as u64
    }

    /// Remaining edges from chosen cells to cells at or after `next`.
    fn outgoing_open(&self, next: usize) -> u64 {
        self.chosen
            .iter()
            .map(|&c| {
                self.out_nb[c]
                    .iter()
                    .filter(|nb| nb.is_some_and(|x| x >= next && !self.member[x]))
                    .count() as u64
            })
            .sum()
    }

    fn dfs(&mut self, next: usize, settled: u64) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::InfeasibleEnumeration {
                reason: format!("oracle exceeded {} search nodes", self.budget),
            });
        }
        if self.chosen.len() == self.n {
            let total = settled + self.outgoing_open(next);
            self.best = self.best.min(total);
            return Ok(());
        }
        let remaining = self.n - self.chosen.len();
        let mut skipped = 0u64;
        let last = self.len - remaining;
        for c in next..=last {
            if settled + skipped + self.positive >= self.best {
                break;
            }
            let gain = self.outgoing_settled(c);
            self.member[c] = true;
            self.chosen.push(c);
            let result = self.dfs(c + 1, settled + skipped + gain);
            self.chosen.pop();
            self.member[c] = false;
            result?;
            skipped += self.incoming(c);
        }
        Ok(())
    }
}

/// Minimum of `∂(S)` over `n`-point sets `S` inside `[-radius, radius]^d`
/// whose least point is the origin.
pub fn brute_force_oracle(u: &GeneratorSet, n: usize, radius: i64) -> Result<u64> {
    brute_force_oracle_with_budget(u, n, radius, DEFAULT_ORACLE_NODES)
}

pub fn brute_force_oracle_with_budget(
    u: &GeneratorSet,
    n: usize,
    radius: i64,
    budget: u64,
) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("set size must be at least 1".into()));
    }
    if radius < 1 {
        return Err(Error::InvalidArgument("radius must be at least 1".into()));
    }
    let grid = Grid::new(u.dim(), radius)?;
    if grid.len - grid.origin < n {
        return Err(Error::InfeasibleEnumeration {
            reason: format!("box of radius {radius} has fewer than {n} admissible cells"),
        });
    }
    let origin = grid.origin;
    let positive = u
        .iter()
        .filter(|g| g.coords().iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
        .count() as u64;
    let mut search = Search {
        n,
        len: grid.len,
        out_nb: grid.neighbor_table(u, 1),
        in_nb: grid.neighbor_table(u, -1),
        positive,
        member: vec![false; grid.len],
        chosen: vec![origin],
        best: u64::MAX,
        nodes: 0,
        budget,
    };
    search.member[origin] = true;
    let settled = search.outgoing_settled(origin);
    search.dfs(origin + 1, settled)?;
    Ok(search.best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::validate_generators;

    fn l1() -> GeneratorSet {
        validate_generators(2, &[[1, 0], [-1, 0], [0, 1], [0, -1]]).unwrap()
    }

    #[test]
    fn singletons_have_k_edges() {
        assert_eq!(brute_force_oracle(&l1(), 1, 1).unwrap(), 4);
        let asym = validate_generators(2, &[[2, 1], [1, 1], [-1, 0], [0, -1]]).unwrap();
        assert_eq!(brute_force_oracle(&asym, 1, 2).unwrap(), 4);
    }

    #[test]
    fn l1_tetromino() {
        assert_eq!(brute_force_oracle(&l1(), 4, 4).unwrap(), 8);
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(
            brute_force_oracle_with_budget(&l1(), 5, 5, 10),
            Err(Error::InfeasibleEnumeration { .. })
        ));
    }
}
