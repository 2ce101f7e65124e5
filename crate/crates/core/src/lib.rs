//! Quantum Max-d-Cut on complete multipartite graphs.
//!
//! The d-QMC Hamiltonian of a graph `G` is `Σ_{(i,j) ∈ E} 2(I − Swap_ij)` on
//! `(ℂ^d)^⊗n`. For `K_{p,q,r}` its largest eigenvalue reduces to a finite
//! maximization over partitions weighted by Littlewood–Richardson
//! coefficients ([`solver`]). The [`oracle`] module computes the same number
//! by exact diagonalization and is used to cross-check the reduction.

pub mod error;
pub mod graphs;
pub mod lr;
pub mod oracle;
pub mod partitions;
pub mod solver;

pub use error::{QmcError, Result};
pub use graphs::Graph;
pub use lr::{FactorTuple, LRTableau, SkewShape, ValidTuple};
pub use partitions::Partition;
pub use solver::{Maximizer, Method, QmcInstance, QmcSolution};
