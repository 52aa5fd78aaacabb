//! Exact computations around binomial edge ideals.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] – simple graphs on `1..=n`, isomorphism-class enumeration and the
//!   combinatorial statistics (induced paths, induced matchings, cliques, ...).
//! * [`closedness`] – closed labelings and the interval characterisation of
//!   their clique complexes.
//! * [`poly`] – multivariate polynomials over `GF(p)` or `Q`, Buchberger's
//!   algorithm and ideal operations (membership, sum, intersection).
//! * [`edge_ideals`] – `J_G`, the bipartite initial-ideal graph, the primes
//!   `P_S(G)` and the leaf decomposition `J_G = Q1 ∩ Q2`.
//! * [`regularity`] – graded Betti numbers via Hochster's formula and via a
//!   Schreyer free resolution, and the regularity read off from them.

pub mod closedness;
pub mod edge_ideals;
pub mod error;
pub mod graph;
pub mod poly;
pub mod regularity;

pub use error::{Error, Result};
