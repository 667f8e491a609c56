//! Systolic geometry of arithmetic quotients, computationally.
//!
//! The crate turns a chain of classical inequalities into executable,
//! cross-checked numerics:
//!
//! * [`polynomials`] — integer polynomials, Mahler measure via two
//!   independent algorithms (root finding and Graeffe root-squaring), exact
//!   detection of products of cyclotomics, and an exhaustive scan against the
//!   `(loglog d / log d)^3` lower bound for non-cyclotomic polynomials.
//! * [`linalg`] — exact integer/rational matrices, characteristic polynomials
//!   by the Faddeev–LeVerrier recursion, the adjoint representation of
//!   `SL(n)`, and a Jacobi eigensolver for real symmetric matrices.
//! * [`symspace`] — the symmetric space of positive definite matrices:
//!   distances, isometries, displacement, and translation-length lower bounds
//!   for semisimple elements in terms of the Mahler measure of their
//!   characteristic polynomials, culminating in a systole lower bound.
//! * [`volumes`] — Euclidean and hyperbolic ball volumes and the comparison
//!   between them.
//! * [`nerve`] — greedy nets in several model metric spaces, the nerve
//!   complex of a ball cover, and size/degree certificates for it.
//! * [`homology`] — boundary matrices, Smith normal form over the integers,
//!   and Betti numbers plus torsion of a simplicial complex.
//! * [`bounds`] — the headline bound formulas tying systole, volume, and
//!   degree of definition together, with all constants explicit.
//!
//! Everything is deterministic: randomized helpers take explicit seeds
//! ([`rng`]), and report formatting ([`format`]) is byte-stable across runs.

pub mod bounds;
pub mod error;
pub mod format;
pub mod homology;
pub mod linalg;
pub mod nerve;
pub mod polynomials;
pub mod rng;
pub mod symspace;
pub mod volumes;
mod xfloat;

pub use error::{Error, Result};
