//! Exact scalars and exact dense linear algebra.
//!
//! [`Rational`] and [`Gaussian`] are the only coefficient fields used anywhere
//! in the crate. [`ExactMatrix`] provides the fraction-free rank computation
//! that the Shapovalov machinery is built on.

mod gaussian;
mod matrix;
pub(crate) mod rational;

pub use gaussian::Gaussian;
pub use matrix::{rank_exact, ExactMatrix};
pub use rational::Rational;
