//! Lagrange interpolation of finite cyclic groups of unitary matrices.
//!
//! A unitary `q` of finite order `p` generates `{u, q, .., q^{p−1}}`. The
//! curve `m(θ) = Σ_j m_j(θ) q^j`, with `m_j` the Lagrange basis polynomials in
//! `e^{iθ}` on the p-th roots of unity, passes through `q^j` at `θ = 2πj/p`
//! and is a one-parameter unitary group. Seeding it with a permutation matrix
//! lifts a classical reversible gate to a continuous family of quantum gates.

pub mod catalog;
pub mod error;
pub mod interp;
pub mod linalg;
pub mod perm;

pub use error::{Error, Result};
pub use interp::{
    coefficient_sum, cyclic_convolution, lagrange_coefficients, CoefficientVector, CyclicSubgroup,
    Formula, InterpolationCurve,
};
pub use linalg::{Matrix, Tolerance, C64};
pub use perm::{enumerate_cycle_graph, landau, CycleGraph, Permutation};
