//! Named special series and the identity catalog.

mod catalog;
mod named;

pub use catalog::{catalog, verify_entry, Expr, IdentityEntry, DEFAULT_PRECISION, TWO_DISSECTION_PRECISION};
pub use named::{build, SeriesName};
