//! Truncated generalized power series on a fractional exponent lattice,
//! with the eta and theta products the character formulas are built from.

mod products;
mod series;

pub use products::{eta_power, euler_product, sqrt_quotient, theta_at_one};
pub use series::QSeries;
