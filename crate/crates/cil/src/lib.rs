//! Clique ideals and independence ideals of finite simple graphs.
//!
//! For a graph `G`, the `t`-clique ideal `K_t(G)` is the squarefree monomial
//! ideal generated by `x^W` over the `t`-cliques `W` of `G`, and the
//! `t`-independence ideal `J_t(G)` is the intersection of the variable
//! primes over the independent `t`-sets, equivalently the Alexander dual of
//! `K_t(G^c)`. This crate constructs both, computes their homological
//! invariants (graded Betti numbers, regularity, projective dimension,
//! Cohen-Macaulayness, linear quotients, shellability, vertex
//! decomposability) along two independent routes, and cross-validates the
//! closed-form results for paths, cycles and chordal graphs at desk scale:
//!
//! * [`homology`] is the brute-force ground truth: exact simplicial homology
//!   over GF(2), GF(p) or the rationals, graded Betti numbers through
//!   Hochster's formula, and the Reisner Cohen-Macaulay criterion.
//! * [`resolution`] and [`shelling`] carry the structural side: vertex
//!   splittings of chordal clique ideals, linear quotients and their
//!   binomial Betti formula, constructive shellings of the path and cycle
//!   complexes, and the closed-form regularity / projective-dimension
//!   statements.
//!
//! The `cil` binary exposes all of it; see the `cli` module and the README.

pub mod cli;
pub mod complex;
pub mod error;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod limits;
pub mod linalg;
pub mod resolution;
pub mod set;
pub mod shelling;
pub mod suites;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use graph::Graph;
pub use homology::BettiTable;
pub use ideal::MonomialIdeal;
pub use linalg::FieldSpec;
pub use set::VertexSet;
