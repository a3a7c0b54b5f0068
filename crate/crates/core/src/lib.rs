//! Exact verification of the conditions a Dirac hamiltonian must meet for
//! its positive energy to be a repeated eigenvalue at every momentum.
//!
//! The crate works in three layers:
//!
//! * [`algebra`] and [`symmat`] build the momentum-space matrix
//!   `h(p) = alpha . p + beta m` and its characteristic polynomial exactly.
//! * [`dispersion`] demands that `E_p = sqrt(p^2 + m^2)` be a root of given
//!   multiplicity, solves for the forced coefficients or proves that no
//!   matrices of that size can work, and checks concrete matrix sets.
//! * [`clifford`] and [`spectrum`] cross-check the result: the anticommutation
//!   relations, trace and determinant conditions, canonical forms, and a
//!   floating-point eigen-solver over momentum grids.

pub mod algebra;
pub mod clifford;
pub mod dispersion;
pub mod matrix;
pub mod spectrum;
pub mod symmat;

pub use algebra::{rat, ComplexRational, EPoly, MultiPoly, Rational, Ring, Var};
pub use matrix::{CMatrix, Matrix};
pub use symmat::{MatrixSet, PolyMatrix};
