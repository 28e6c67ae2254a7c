//! Cubic Thue equations and inequalities with small right-hand sides:
//! bounded search, the cubic unit equation in a single integer variable,
//! and ingestion of externally certified solution sets.
//!
//! The searcher is complete within its box `max(|x|, |y|) <= bound` and says
//! so — and no more — through the completeness flag. Certified files replace
//! a bounded stage with an externally solved set (re-verified entry by
//! entry) and lift the flag.

mod certified;
mod search;

pub use certified::{form_checksum, ingest_certified, parse_certified, render_certified};
pub use search::solve_thue_range;

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::algebra::integer_roots;
use crate::error::Result;
use crate::numberfields::{norm_l_element, BinaryCubicForm, CubicFieldSpec};

/// How a solution set claims completeness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchCompleteness {
    /// Every solution with `max(|x|, |y|) <= bound`; nothing is claimed
    /// beyond the box.
    BoundedSearch(u64),
    /// A complete set produced by an external solver and re-verified here;
    /// the string identifies the source.
    ExternalCertified(String),
}

/// Solutions `(x, y, value)` of `|form(x, y)| <= max_abs_rhs`, deduplicated,
/// closed under `(x, y) -> (-x, -y)`, in ascending `(x, y)` order.
#[derive(Clone, Debug)]
pub struct ThueSolutionSet {
    pub form: BinaryCubicForm,
    pub max_abs_rhs: u64,
    pub solutions: Vec<(BigInt, BigInt, BigInt)>,
    pub completeness: SearchCompleteness,
}

impl ThueSolutionSet {
    /// The `(x, y)` pairs whose value has absolute value exactly `rhs`.
    pub fn pairs_with_abs_value(&self, rhs: u64) -> Vec<(BigInt, BigInt)> {
        use num_traits::Signed;
        let target = BigInt::from(rhs);
        self.solutions
            .iter()
            .filter(|(_, _, v)| v.abs() == target)
            .map(|(x, y, _)| (x.clone(), y.clone()))
            .collect()
    }

    /// All `(x, y)` pairs with `|value| <= cap`.
    pub fn pairs_up_to(&self, cap: u64) -> Vec<(BigInt, BigInt)> {
        use num_traits::Signed;
        let target = BigInt::from(cap);
        self.solutions
            .iter()
            .filter(|(_, _, v)| v.abs() <= target)
            .map(|(x, y, _)| (x.clone(), y.clone()))
            .collect()
    }
}

/// All integers `y0` with `N(y0 + y1 t + y2 t^2)` in `rhs_set`: for each
/// target the norm is a monic cubic polynomial equation in `y0`, solved by
/// exact integer root extraction. Every returned value is re-verified.
pub fn solve_norm_pm(
    cubic: &CubicFieldSpec,
    y1: &BigInt,
    y2: &BigInt,
    rhs_set: &BTreeSet<BigInt>,
) -> Result<BTreeSet<BigInt>> {
    let p = norm_poly_in_y0(cubic, y1, y2);
    let mut out = BTreeSet::new();
    for r in rhs_set {
        let shifted = &p - &crate::algebra::UniPoly::constant("y0", r.clone());
        for root in integer_roots(&shifted)? {
            debug_assert_eq!(&norm_l_element(cubic, &root, y1, y2), r);
            out.insert(root);
        }
    }
    Ok(out)
}

/// `N(y0 + y1 t + y2 t^2)` as a monic cubic polynomial in `y0`: the
/// characteristic polynomial of `-(y1 t + y2 t^2)` evaluated at `y0`.
fn norm_poly_in_y0(cubic: &CubicFieldSpec, y1: &BigInt, y2: &BigInt) -> crate::algebra::UniPoly {
    use crate::algebra::IMat;
    use num_traits::Zero;
    // multiplication matrix of y1 t + y2 t^2 on (1, t, t^2)
    let mut m = IMat::zeros(3);
    // column 0: (y1 t + y2 t^2) * 1
    m.set(1, 0, y1.clone());
    m.set(2, 0, y2.clone());
    // column 1: (...) * t = y1 t^2 + y2 t^3, reduce t^3
    let mut c1 = [BigInt::zero(), BigInt::zero(), y1.clone()];
    c1[0] -= y2 * cubic.a0();
    c1[1] -= y2 * cubic.a1();
    c1[2] -= y2 * cubic.a2();
    for (i, v) in c1.iter().enumerate() {
        m.set(i, 1, v.clone());
    }
    // column 2: (...) * t^2 = y1 t^3 + y2 t^4
    let mut raw = [
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
        y1.clone(),
        y2.clone(),
    ];
    for k in (3..5).rev() {
        if raw[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut raw[k], BigInt::zero());
        raw[k - 1] -= &c * cubic.a2();
        raw[k - 2] -= &c * cubic.a1();
        raw[k - 3] -= &c * cubic.a0();
    }
    for i in 0..3 {
        m.set(i, 2, raw[i].clone());
    }
    // char poly of -M is det(y0 I + M) = prod (y0 + beta_j)
    let neg = {
        let mut n = IMat::zeros(3);
        for i in 0..3 {
            for j in 0..3 {
                n.set(i, j, -m.get(i, j));
            }
        }
        n
    };
    neg.char_poly("y0")
}
