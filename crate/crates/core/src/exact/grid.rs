use crate::error::{Error, Result};
use crate::lattice::{GeneratorSet, LatticeVector};

/// Upper limit on the number of cells of a dense search grid.
const MAX_CELLS: usize = 50_000_000;

/// The box `[-radius, radius]^d` flattened in row-major order, so that cell
/// index order is lexicographic order of coordinates.
#[derive(Clone, Debug)]
pub(crate) struct Grid {
    pub dim: usize,
    pub radius: i64,
    pub strides: Vec<usize>,
    pub len: usize,
    pub origin: usize,
}

impl Grid {
    pub fn new(dim: usize, radius: i64) -> Result<Self> {
        let side = 2 * radius + 1;
        let mut strides = vec![1usize; dim];
        let mut len = 1usize;
        for j in (0..dim).rev() {
            strides[j] = len;
            len = len
                .checked_mul(side as usize)
                .filter(|&l| l <= MAX_CELLS)
                .ok_or_else(|| Error::InfeasibleEnumeration {
                    reason: format!("search box of side {side} in dimension {dim} is too large"),
                })?;
        }
        let origin = strides.iter().map(|s| s * radius as usize).sum();
        Ok(Grid {
            dim,
            radius,
            strides,
            len,
            origin,
        })
    }

    pub fn index(&self, coords: &[i64]) -> Option<usize> {
        let mut idx = 0usize;
        for (j, &c) in coords.iter().enumerate() {
            if c < -self.radius || c > self.radius {
                return None;
            }
            idx += (c + self.radius) as usize * self.strides[j];
        }
        Some(idx)
    }

    pub fn coords(&self, mut index: usize) -> Vec<i64> {
        self.strides
            .iter()
            .map(|&stride| {
                let x = (index / stride) as i64 - self.radius;
                index %= stride;
                x
            })
            .collect()
    }

    /// For every cell and generator, the index of `cell + sign·u_i` if it
    /// stays inside the box.
    pub fn neighbor_table(&self, u: &GeneratorSet, sign: i64) -> Vec<Vec<Option<usize>>> {
        let gens: Vec<Vec<i64>> = u
            .iter()
            .map(|g| g.coords().iter().map(|&x| x * sign).collect())
            .collect();
        (0..self.len)
            .map(|c| {
                let base = self.coords(c);
                gens.iter()
                    .map(|g| {
                        let moved: Vec<i64> = base.iter().zip(g).map(|(a, b)| a + b).collect();
                        self.index(&moved)
                    })
                    .collect()
            })
            .collect()
    }

    /// Sorted coordinates of a cell list translated to the nonnegative
    /// orthant with zero minimum in each coordinate.
    pub fn canonical(&self, cells: &[usize]) -> Vec<LatticeVector> {
        let pts: Vec<Vec<i64>> = cells.iter().map(|&c| self.coords(c)).collect();
        let mut lo = pts[0].clone();
        for p in &pts {
            for j in 0..self.dim {
                lo[j] = lo[j].min(p[j]);
            }
        }
        let mut out: Vec<LatticeVector> = pts
            .iter()
            .map(|p| {
                let shifted: Vec<i64> = p.iter().zip(&lo).map(|(a, b)| a - b).collect();
                LatticeVector::new(shifted)
            })
            .collect();
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_order_is_lexicographic() {
        let g = Grid::new(2, 2).unwrap();
        assert_eq!(g.len, 25);
        assert_eq!(g.coords(g.origin), vec![0, 0]);
        let a = g.index(&[0, 2]).unwrap();
        let b = g.index(&[1, -2]).unwrap();
        assert!(a < b);
        assert_eq!(g.index(&[3, 0]), None);
        for c in 0..g.len {
            assert_eq!(g.index(&g.coords(c)), Some(c));
        }
    }

    #[test]
    fn oversized_grid_rejected() {
        assert!(matches!(
            Grid::new(4, 200),
            Err(Error::InfeasibleEnumeration { .. })
        ));
    }
}
