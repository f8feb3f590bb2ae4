//! Exact symbolic engine for the microlocal Kodaira-Spencer Lie algebra of a
//! plane branch `y^k + x^n` and the moduli stratification of its semiuniversal
//! equisingular microlocal deformation.
//!
//! Everything is computed over Q with arbitrary-precision rationals; there is
//! no floating point anywhere. The main pipeline is
//!
//! 1. [`family`] — combinatorics of the deformation `F_A`,
//! 2. [`puiseux`] — the parametrization `(X, Y, P)` of the relative conormal,
//! 3. [`milnor`] — reduction modulo the relative Jacobian ideal, the lifted
//!    polynomials `H^gamma` and the structure-constant tensor,
//! 4. [`ks`] — Kodaira-Spencer vector fields, Gaussian echelonization,
//!    generators of the kernel algebras, brackets and exact flows,
//! 5. [`strata`] — rank filtrations, microlocal Tjurina and Hilbert
//!    invariants, and the flattening stratification of the base space.
//!
//! The crate is `no_std`-compatible (`alloc` required); IO and file formats
//! live in the companion CLI crate.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod family;
pub mod grading;
pub mod ks;
pub mod linalg;
pub mod milnor;
pub mod model;
pub mod poly;
pub mod puiseux;
pub mod rat;
pub mod sample;
pub mod series;
pub mod strata;

pub use family::{CurveFamily, ParamSet, SetName};
pub use grading::Grading;
// pub use model::Model; // enabled once model.rs lands
pub use poly::{Degree, MPoly, Monomial, Var};
pub use rat::Rat;
pub use series::TSeries;
