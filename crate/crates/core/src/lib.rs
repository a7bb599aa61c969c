//! Exact computations of infinitesimal variations of Hodge structure for
//! algebraic curves.
//!
//! Everything here works over the rationals with no rounding. The building
//! blocks are dense exact matrices ([`linalg`]), homogeneous polynomials
//! ([`poly`]) and degree-`k` pieces of graded quotient rings ([`quotient`]).
//! On top of those sit the canonical multiplication maps ([`canonical`]), the
//! Jacobian-ring cup product for smooth plane curves ([`jacobian`]), closed-form
//! genus and δ-invariant bookkeeping ([`invariants`]) and the rank-defect
//! formulas for degenerating families ([`degeneration`]).

pub mod canonical;
pub mod degeneration;
mod error;
pub mod invariants;
pub mod jacobian;
pub mod linalg;
pub mod poly;
pub mod quotient;

pub use error::{Error, Result};
pub use linalg::{ExactMatrix, Rational};
pub use poly::{Monomial, Polynomial, VariableSet};
