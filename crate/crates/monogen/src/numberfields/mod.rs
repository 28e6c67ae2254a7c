//! Field and order models: the totally real cubic, the imaginary quadratic,
//! quadratic integers, the rank-6 composite order with its multiplication
//! table, element indices, norm forms, and the exact factors of the index
//! factorization.
//!
//! No floating point: discriminants and indices go through structure
//! constants, characteristic polynomials and resultants, so every value is
//! an exact integer.

pub mod fields;
pub mod forms;
pub mod order;
pub mod quadint;

pub use fields::{CubicFieldSpec, ImagQuadSpec, QuadCase};
pub use forms::{norm_form_shifted, norm_form_theta, norm_l_element, BinaryCubicForm};
pub use order::{composite_order, CompositeOrder, ElementCoords, IndexResult};
pub use quadint::QuadInt;
