//! Edge, vertex and directional boundaries in the Cayley graph `G_U`.
//!
//! All boundaries use the directed convention: an edge `v -> v + u_i` leaves
//! `S` when `v ∈ S` and `v + u_i ∉ S`. For symmetric generating sets this is
//! the ordinary undirected edge boundary.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::BoundaryTable;
use crate::lattice::{push_in_place, GeneratorSet, LatticeVector, PointSet};

/// Edge boundary split by direction, together with the vertex boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryBreakdown {
    /// `∂_i(S)` for each generator, in input order.
    pub per_direction: Vec<u64>,
    /// `∂(S) = Σ_i ∂_i(S)`.
    pub total: u64,
    /// `∂_v(S)`.
    pub vertex: u64,
}

fn check_dims(s: &PointSet, u: &GeneratorSet) -> Result<()> {
    if s.dim() != u.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            found: s.dim(),
        });
    }
    Ok(())
}

/// `∂_i(S) = |{v ∈ S : v + u_i ∉ S}|`.
pub fn directional_boundary(s: &PointSet, index: usize, u: &GeneratorSet) -> Result<u64> {
    check_dims(s, u)?;
    let g = u.get(index)?;
    let mut count = 0;
    for v in s.iter() {
        if !s.contains(&v.checked_add(g)?) {
            count += 1;
        }
    }
    Ok(count)
}

/// `∂(S)` alone, without the vertex boundary.
pub fn edge_boundary_total(s: &PointSet, u: &GeneratorSet) -> Result<u64> {
    check_dims(s, u)?;
    (0..u.len()).map(|i| directional_boundary(s, i, u)).sum()
}

pub fn edge_boundary(s: &PointSet, u: &GeneratorSet) -> Result<BoundaryBreakdown> {
    check_dims(s, u)?;
    let per_direction = (0..u.len())
        .map(|i| directional_boundary(s, i, u))
        .collect::<Result<Vec<u64>>>()?;
    Ok(BoundaryBreakdown {
        total: per_direction.iter().sum(),
        per_direction,
        vertex: vertex_boundary(s, u)?,
    })
}

/// `F_i = {v ∈ S : v + u_i ∉ S}`.
pub fn frontier(s: &PointSet, index: usize, u: &GeneratorSet) -> Result<PointSet> {
    check_dims(s, u)?;
    let g = u.get(index)?;
    let mut out = PointSet::empty(s.dim());
    for v in s.iter() {
        if !s.contains(&v.checked_add(g)?) {
            out.insert(v.clone())?;
        }
    }
    Ok(out)
}

/// Number of out-neighbours of `S` outside `S`, i.e. `|S + (U ∪ {0})| - |S|`.
pub fn vertex_boundary(s: &PointSet, u: &GeneratorSet) -> Result<u64> {
    check_dims(s, u)?;
    let mut outside: FxHashSet<LatticeVector> = FxHashSet::default();
    for v in s.iter() {
        for g in u {
            let w = v.checked_add(g)?;
            if !s.contains(&w) {
                outside.insert(w);
            }
        }
    }
    Ok(outside.len() as u64)
}

/// One `Z`-line `{v + λ u_i}` meeting `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineClass {
    /// Lexicographically least point of the line inside `S`.
    pub representative: LatticeVector,
    /// Sorted positions `λ` of the points of `S` on the line, measured from a
    /// fixed coset representative.
    pub positions: Vec<i64>,
}

impl LineClass {
    /// Whether the line meets `S` in a set of consecutive positions.
    pub fn is_interval(&self) -> bool {
        self.positions.windows(2).all(|w| w[1] == w[0] + 1)
    }
}

/// Groups `S` into the lines `L_{v,i}` it meets.
///
/// Lines are cosets of `Z u_i`, so when `u_i` is imprimitive several of them
/// lie on one real line and are still counted separately.
pub fn lines(s: &PointSet, index: usize, u: &GeneratorSet) -> Result<Vec<LineClass>> {
    check_dims(s, u)?;
    let g = u.get(index)?;
    let pivot = g
        .coords()
        .iter()
        .position(|&x| x != 0)
        .expect("validated generators are nonzero");
    let step = g.coords()[pivot];
    let mut groups: BTreeMap<LatticeVector, (LatticeVector, Vec<i64>)> = BTreeMap::new();
    for v in s.iter() {
        let lambda = v.coords()[pivot].div_euclid(step);
        let key = v.checked_sub(&g.checked_scale(lambda)?)?;
        let entry = groups.entry(key).or_insert_with(|| (v.clone(), Vec::new()));
        if *v < entry.0 {
            entry.0 = v.clone();
        }
        entry.1.push(lambda);
    }
    let mut out: Vec<LineClass> = groups
        .into_values()
        .map(|(representative, mut positions)| {
            positions.sort_unstable();
            LineClass {
                representative,
                positions,
            }
        })
        .collect();
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(out)
}

/// `|ℒ_i(S)|`, the number of lines in direction `u_i` meeting `S`.
pub fn line_classes(s: &PointSet, index: usize, u: &GeneratorSet) -> Result<u64> {
    Ok(lines(s, index, u)?.len() as u64)
}

/// Both sides of the edge-change identity for adding `tp` to a disjoint `t`:
/// `(∂_j(T ∪ T') - ∂_j(T), |T' \ ((T ∪ T') - u_j)| - |T' ∩ (T + u_j)|)`.
pub fn split_sides(t: &PointSet, tp: &PointSet, j: usize, u: &GeneratorSet) -> Result<(i64, i64)> {
    check_dims(t, u)?;
    check_dims(tp, u)?;
    if !t.is_disjoint(tp) {
        return Err(Error::NotDisjoint);
    }
    let g = u.get(j)?;
    let union = t.union(tp)?;
    let lhs = directional_boundary(&union, j, u)? as i64 - directional_boundary(t, j, u)? as i64;
    let mut leaving = 0i64;
    let mut entering = 0i64;
    for v in tp.iter() {
        // v ∉ (T ∪ T') - u_j  ⇔  v + u_j ∉ T ∪ T'
        if !union.contains(&v.checked_add(g)?) {
            leaving += 1;
        }
        // v ∈ T + u_j  ⇔  v - u_j ∈ T
        if t.contains(&v.checked_sub(g)?) {
            entering += 1;
        }
    }
    Ok((lhs, leaving - entering))
}

/// Size increments `|S_{1..i}| - |S_{1..i-1}|` of the staged pushes
/// `S, S_1, S_12, ..., S_{1..k}`; they sum to `|S + Z_0| - |S|`.
pub fn staged_push_increments(s: &PointSet, u: &GeneratorSet) -> Result<Vec<u64>> {
    check_dims(s, u)?;
    let mut current = s.clone();
    let mut out = Vec::with_capacity(u.len());
    for g in u {
        let before = current.len();
        push_in_place(&mut current, g)?;
        out.push((current.len() - before) as u64);
    }
    Ok(out)
}

/// Whether `∂(S) ≤ (1 + eps) ∂*(|S|)`, compared exactly.
pub fn epsilon_close(
    s: &PointSet,
    u: &GeneratorSet,
    eps: &BigRational,
    table: &BoundaryTable,
) -> Result<bool> {
    let optimum = table.optimum(s.len())?;
    let boundary = edge_boundary(s, u)?.total;
    let lhs = BigRational::from_integer(BigInt::from(boundary));
    let rhs = (BigRational::one() + eps) * BigRational::from_integer(BigInt::from(optimum));
    Ok(lhs <= rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{translate, validate_generators};

    fn l1() -> GeneratorSet {
        validate_generators(2, &[[1, 0], [-1, 0], [0, 1], [0, -1]]).unwrap()
    }

    fn ps(points: &[[i64; 2]]) -> PointSet {
        PointSet::from_points(2, points.iter().copied()).unwrap()
    }

    fn square(n: i64) -> PointSet {
        let pts: Vec<[i64; 2]> = (0..n).flat_map(|x| (0..n).map(move |y| [x, y])).collect();
        ps(&pts)
    }

    #[test]
    fn edge_boundary_examples() {
        let u = l1();
        let single = edge_boundary(&ps(&[[0, 0]]), &u).unwrap();
        assert_eq!(single.total, 4);
        let sq = edge_boundary(&square(3), &u).unwrap();
        assert_eq!(sq.total, 12);
        assert_eq!(sq.per_direction, vec![3, 3, 3, 3]);
        let empty = edge_boundary(&PointSet::empty(2), &u).unwrap();
        assert_eq!((empty.total, empty.vertex), (0, 0));
        assert!(edge_boundary(&PointSet::origin(3), &u).is_err());
    }

    #[test]
    fn frontier_examples() {
        let u = l1();
        let s = ps(&[[4, 4]]);
        assert_eq!(frontier(&s, 0, &u).unwrap(), s);
        assert_eq!(
            frontier(&square(3), 0, &u).unwrap(),
            ps(&[[2, 0], [2, 1], [2, 2]])
        );
        assert_eq!(
            frontier(&ps(&[[0, 0], [1, 0]]), 0, &u).unwrap(),
            ps(&[[1, 0]])
        );
        assert!(frontier(&s, 4, &u).is_err());
    }

    #[test]
    fn vertex_boundary_examples() {
        let u = l1();
        assert_eq!(vertex_boundary(&ps(&[[0, 0]]), &u).unwrap(), 4);
        assert_eq!(vertex_boundary(&ps(&[[0, 0], [1, 0]]), &u).unwrap(), 6);
        assert_eq!(vertex_boundary(&PointSet::empty(2), &u).unwrap(), 0);
    }

    #[test]
    fn line_class_examples() {
        let u = l1();
        assert_eq!(line_classes(&square(3), 0, &u).unwrap(), 3);
        assert_eq!(line_classes(&ps(&[[7, -2]]), 2, &u).unwrap(), 1);
        let gap = ps(&[[0, 0], [2, 0]]);
        assert_eq!(line_classes(&gap, 0, &u).unwrap(), 1);
        assert_eq!(directional_boundary(&gap, 0, &u).unwrap(), 2);
        assert!(!lines(&gap, 0, &u).unwrap()[0].is_interval());
    }

    #[test]
    fn imprimitive_direction_splits_real_lines() {
        let u = validate_generators(2, &[[2, 0], [1, 0], [0, 1]]).unwrap();
        let row = ps(&[[0, 0], [1, 0], [2, 0], [3, 0]]);
        // even and odd points lie on distinct Z-lines of direction (2,0)
        let l = lines(&row, 0, &u).unwrap();
        assert_eq!(l.len(), 2);
        assert!(l.iter().all(LineClass::is_interval));
        assert_eq!(l[0].representative, LatticeVector::from([0, 0]));
        assert_eq!(l[1].representative, LatticeVector::from([1, 0]));
        assert_eq!(directional_boundary(&row, 0, &u).unwrap(), 2);
    }

    #[test]
    fn split_sides_examples() {
        let u = l1();
        let t = ps(&[[0, 0]]);
        assert_eq!(split_sides(&t, &PointSet::empty(2), 0, &u).unwrap(), (0, 0));
        assert_eq!(split_sides(&t, &ps(&[[1, 0]]), 0, &u).unwrap(), (0, 0));
        assert_eq!(split_sides(&t, &t, 0, &u).unwrap_err(), Error::NotDisjoint);
    }

    #[test]
    fn translation_invariance_spot_check() {
        let u = l1();
        let s = ps(&[[0, 0], [1, 0], [1, 1], [3, 1]]);
        let moved = translate(&s, &[-5, 9].into()).unwrap();
        assert_eq!(
            edge_boundary(&s, &u).unwrap(),
            edge_boundary(&moved, &u).unwrap()
        );
    }

    #[test]
    fn staged_pushes_telescope() {
        let u = l1();
        let inc = staged_push_increments(&square(3), &u).unwrap();
        // 3×3 -> 4×3 -> 5×3 -> 5×4 -> 5×5
        assert_eq!(inc, vec![3, 3, 5, 5]);
    }
}
