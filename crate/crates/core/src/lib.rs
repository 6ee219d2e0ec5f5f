//! Weighted gradings on polynomial rings over the rationals: initial forms,
//! differential forms and their degrees, the cancellation invariant of
//! substituting into a polynomial over a subalgebra, and checkers for the
//! degree inequalities these quantities satisfy.

pub mod automorph;
pub mod error;
pub mod forms;
pub mod groebner;
pub mod ineq;
pub mod parse;
pub mod poly;
pub mod sualg;
pub mod upoly;

pub use error::{Error, Result};
pub use poly::{Degree, Gamma, Monomial, Polynomial, Rational, WeightVector};
pub use upoly::UPoly;
