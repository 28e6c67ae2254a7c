//! Exact arithmetic kernel: integer polynomials (dense univariate and sparse
//! multivariate), resultants and discriminants, symmetric-function
//! reduction, integer root extraction, and small exact matrix routines.
//!
//! Everything here is over arbitrary-precision integers; there is no
//! floating point anywhere in this module. All values are immutable after
//! construction and safe to share across threads.

pub mod matrix;
pub mod multipoly;
pub mod resultant;
pub mod roots;
pub mod symmetric;
pub mod unipoly;

pub use matrix::IMat;
pub use multipoly::{Monomial, MultiPoly};
pub use resultant::{poly_discriminant, poly_resultant};
pub use roots::integer_roots;
pub use symmetric::symmetric_reduce;
pub use unipoly::UniPoly;
