//! Exact polynomial algebra: big-integer univariate polynomials in t,
//! sparse multivariate polynomials over a finite field, and derivations.

mod derivation;
mod intpoly;
mod mpoly;

pub use derivation::Derivation;
pub use intpoly::{IntPoly, RootSplit};
pub use mpoly::{equal_up_to_scalar, mpoly_det, MPoly};
