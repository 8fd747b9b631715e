//! Exact-arithmetic laboratory for the almost-commuting variety of `sp_2n`.
//!
//! The variety in question is the zero locus of the moment map
//! `mu(x, y, i) = [x, y] + i^2` on `sp_2n ⊕ sp_2n ⊕ C^2n`, where `i^2`
//! denotes the rank-at-most-one symplectic operator `v ↦ ω(i, v)·i`.
//! Everything here runs over the rationals with no floating point and no
//! tolerances: membership, Jacobian rank certificates at sampled points,
//! component combinatorics of the locus `{p_k q_k = 0}`, simultaneous
//! triangularization into a Borel subalgebra, closed-orbit classification,
//! and invariant-theoretic checks for the quotient by `Sp_2n`.
//!
//! Modules mirror the layers of the construction:
//!
//! - [`matrix`] / [`poly`]: dense rational matrices, fraction-free
//!   elimination, characteristic/minimal polynomials, rational eigensystems.
//! - [`symplectic`]: the symplectic form, `sp_2n` with its basis and
//!   bracket, Cartan points, and the hyperoctahedral Weyl group.
//! - [`scheme`]: membership and Jacobian certificates for the variety,
//!   point samplers over the regular Cartan locus, sign-component
//!   combinatorics, and the minimal-orbit escape witness.
//! - [`triangular`]: common eigenvectors under rank-one commutators and
//!   the recursive reduction that produces Borel certificates.
//! - [`quotient`]: joint spectra, trace-word invariants, the Poisson
//!   bracket on the doubled Cartan, and bounded-degree generation checks.
//! - [`suites`] / [`report`] / [`fixtures`]: seeded experiment suites with
//!   machine-readable, re-verifiable JSON reports.

pub mod error;
pub mod fixtures;
pub mod matrix;
pub mod poly;
pub mod quotient;
pub mod report;
pub mod scalar;
pub mod scheme;
pub mod suites;
pub mod symplectic;
pub mod triangular;

pub use error::{Error, Result};
pub use matrix::ExactMatrix;
pub use scalar::Rational;
