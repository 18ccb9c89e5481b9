//! Exact-arithmetic computation of characters and string functions of relaxed
//! highest-weight modules over the affine Kac-Moody (super)algebras built on
//! sl(2) and osp(1|2) at admissible levels.
//!
//! The crate has two independent computational routes to the same numbers:
//!
//! * a *structural* route — PBW straightening of affine modes, Shapovalov
//!   Gram matrices over the Gaussian rationals, and exact ranks, which yield
//!   weight-space dimensions of relaxed modules and highest-weight modules
//!   ([`affine`]);
//! * a *closed-form* route — truncated generalized `q`-series built from
//!   Dedekind eta and Jacobi theta products, evaluating minimal-model
//!   characters and the relaxed string-function formulas ([`qseries`],
//!   [`characters`]).
//!
//! The [`verifier`] module cross-checks the two routes cell by cell and
//! packages the results as machine-readable reports. Everything is computed
//! over arbitrary-precision rationals; there is no floating point anywhere.

pub mod affine;
pub mod characters;
pub mod error;
pub mod exact;
pub mod finite;
pub mod qseries;
pub mod verifier;

pub use error::{Error, Result};
pub use exact::{ExactMatrix, Gaussian, Rational};
pub use finite::{AlgebraKind, CasimirParam, DynkinLabel, Gen, GroundFamily, Sector};
