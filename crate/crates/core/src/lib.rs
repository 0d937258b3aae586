//! Edge and vertex isoperimetry on Cayley graphs of `Z^d`.
//!
//! For a finite generating set `U` of `Z^d`, the edge boundary of an
//! `n`-point set is asymptotically at least `d·vol(Z)^{1/d}·n^{1-1/d}`, where
//! `Z` is the zonotope `Σ [0, u]`, and the lattice points of dilates of `Z`
//! attain this. The crate computes the objects involved exactly: boundaries,
//! zonotopes and their Ehrhart polynomials, exact minima `∂*(n)` for small
//! `n`, and comparisons against the bound.

pub mod asymptotics;
pub mod boundary;
pub mod checks;
pub mod error;
pub mod exact;
pub mod hull;
pub mod lattice;
pub mod linalg;
pub mod real;
pub mod zonotope;

pub use error::{Error, Result};
pub use exact::{BoundaryTable, SearchConfig, TableEntry};
pub use lattice::{validate_generators, GeneratorSet, LatticeVector, PointSet, PushWord};
pub use real::Real;
pub use zonotope::{build_zonotope, EhrhartPolynomial, Zonotope};
