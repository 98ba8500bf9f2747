//! Exact symbolic engine for residue family operators on spinors over flat
//! euclidean space.
//!
//! The crate is organized in layers:
//!
//! * [`gauss`], [`symbol`], [`poly`], [`ratfun`] — the exact arithmetic
//!   substrate: arbitrary-precision rationals, Gaussian rationals,
//!   multivariate polynomials in formal symbols and rational functions with
//!   canonical normalization.
//! * [`gegenbauer`] — the coefficient families `a_j^(N)(λ)`, `b_j^(N)(λ)` of
//!   even/odd Gegenbauer polynomials, the classical constructions of
//!   `C_k^α`, and mechanical verification of the combinatorial identities
//!   they satisfy (recurrences, Pochhammer/binomial lemmas,
//!   Pfaff–Saalschütz, singular-vector relations).
//! * [`opalgebra`] — normal-form noncommutative algebra of boundary operator
//!   words generated by `e_n·`, `D_T`, `D_N`, `∂_n` and the restriction
//!   `ι*`.
//! * [`resfam`] — the residue family operators built two independent ways
//!   (residue normalization of the distribution family vs. the closed
//!   Gegenbauer form) and both factorization theorems.
//! * [`clifford`] — concrete gamma-matrix realizations, polynomial spinor
//!   fields, the realization functor and the graded eigen-recurrence check.
//! * [`poisson`] — closed-class exact differentiation for the spinor
//!   Poisson kernel and the hyperbolic Dirac eigen verification, plus the
//!   projector algebra for Clifford power distributions.
//! * [`report`] — deterministic, machine-readable verification reports.

pub mod clifford;
pub mod gauss;
pub mod gegenbauer;
pub mod opalgebra;
pub mod poisson;
pub mod poly;
pub mod ratfun;
pub mod report;
pub mod resfam;
pub mod symbol;

pub use gauss::{GaussianRational, Rat};
pub use poly::MultiPoly;
pub use ratfun::RationalFunction;
pub use symbol::Symbol;

/// Engine version stamped into every report.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
