//! Exact q-series arithmetic and the combinatorics of weighted 7-colored
//! partitions.
//!
//! The crate is organised in four layers:
//!
//! - [`series`]: truncated power series over arbitrary-precision integers,
//!   infinite-product expansion, dissection and a bivariate layer carrying a
//!   marker variable `z` for rank/crank statistics.
//! - [`theta`]: named series (theta functions, eta quotients, the coefficient
//!   families `w_t`, `c_t`, ...) and a declarative catalog of identities.
//! - [`combinatorics`]: definition-level enumeration of partitions and vector
//!   partitions, used as a brute-force oracle against the generating functions.
//! - [`verification`]: congruence sweeps, equidistribution checks and the
//!   full theorem suite, producing machine-readable reports.

pub mod combinatorics;
pub mod error;
pub mod series;
pub mod theta;
pub mod verification;

pub use error::{Error, Result};
pub use series::{BivariateSeries, Factor, ProductSpec, QSeries};
