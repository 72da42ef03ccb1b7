//! Exact linear algebra over a [`Field`](crate::field::Field): reduced row
//! echelon forms, kernels, linear solves and the lattice of subspaces.

mod matrix;
mod subspace;

pub use matrix::{Matrix, Rref};
pub use subspace::Subspace;
