//! Monogenity of orders in totally complex sextic fields that are composites
//! of a totally real cubic field and an imaginary quadratic field.
//!
//! The library decides whether the order `Z[1, t, t^2, w, w t, w t^2]`
//! (cubic generator `t`, quadratic generator `w`) admits a power integral
//! basis, enumerates all generators when it does, and proves non-monogenity
//! for a one-parameter family of such orders. The index of an element
//! factors into two norm forms and a quintic-variable form `F`; generators
//! are found by solving small cubic Thue equations and inequalities, then
//! verifying each candidate exactly through its characteristic polynomial.
//!
//! Modules:
//! - [`algebra`]: exact integer polynomial arithmetic, resultants,
//!   symmetric-function reduction, integer roots, small matrices.
//! - [`numberfields`]: the cubic and quadratic field data, the rank-6
//!   order, element indices and the index factorization.
//! - [`indexform`]: symbolic construction of `F` and the inequality caps.
//! - [`thue`]: bounded Thue solving and certified solution ingestion.
//! - [`pipeline`]: the end-to-end generator search.
//! - [`families`]: the parametric non-monogenity certificate.

pub mod algebra;
pub mod error;
pub mod families;
pub mod indexform;
pub mod numberfields;
pub mod pipeline;
pub mod thue;

pub use error::{Error, Result};
