//! Exact-arithmetic verification of Weierstrass-model computations.
//!
//! The library computes with elliptic-curve Weierstrass models over exact
//! coefficient rings — ℤ, small finite fields, and multivariate polynomial
//! rings — and mechanically checks the identities those models satisfy:
//! covariance of the standard invariants under coordinate change, the
//! structure of automorphism groups and their characters in small residue
//! characteristics, and cocycle computations for finite groups acting on
//! truncated power series. Everything is integer/table arithmetic; no
//! floating point is involved anywhere.

pub mod algebra;
pub mod autgroups;
pub mod cohomology;
pub mod families;
pub mod groups;
pub mod parse;
pub mod ring;
pub mod suites;
pub mod transform;
pub mod weierstrass;
