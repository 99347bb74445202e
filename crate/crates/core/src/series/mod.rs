//! Truncated formal power series with exact integer coefficients.

mod bivariate;
mod product;
mod qseries;

pub use bivariate::BivariateSeries;
pub use product::{expand, Expansion, Factor, ProductSpec};
pub use qseries::{pochhammer_series, Comparison, Mismatch, QSeries};
