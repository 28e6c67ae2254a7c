//! Symbolic construction of the quintic-variable form `F(x1, x2, y0, y1, y2)`
//! whose unit values characterize power-basis generators, together with the
//! integer caps coming from the real/imaginary-part inequalities.
//!
//! `F` is the product of the six mixed conjugate differences of a generic
//! element. The product is expanded once over symbolic cubic roots
//! `r1, r2, r3` and quadratic conjugates `w, w'` with the coordinates as
//! passenger variables; it is symmetric in the roots and in the conjugate
//! pair, so two symmetric reductions rewrite it over the elementary
//! symmetric values. That reduced template is field-independent and cached;
//! building `F` for a concrete (or parametric) field is then a substitution
//! of the cubic coefficients and the generator trace/norm.

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{symmetric_reduce, MultiPoly, UniPoly};
use crate::error::{Error, Result};
use crate::numberfields::{CubicFieldSpec, ImagQuadSpec, QuadCase};

/// The five passenger variables of `F`, in canonical order.
pub const F_VARS: [&str; 5] = ["x1", "x2", "y0", "y1", "y2"];

/// The form `F` for one order (or a parametric family of orders).
#[derive(Clone, Debug)]
pub struct IndexFormF {
    /// Over `(x1, x2, y0, y1, y2)`, plus `(t, d)` for the parametric build.
    pub poly: MultiPoly,
    pub case: QuadCase,
    /// Human-readable description of where the form came from.
    pub source: String,
}

/// Integer caps on the norm inequalities of the generator search: a
/// candidate `(x1, x2)` must have shifted-form value of absolute value at
/// most `x_rhs_max`, and `(y1, y2)` at most `y_rhs_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Theorem1Bounds {
    pub x_rhs_max: u32,
    pub y_rhs_max: u32,
}

/// The caps are the integer parts of the real bounds: `1` and `d^(-3/2)`
/// when the generator is `i sqrt(d)`, `8` and `8 d^(-3/2)` when it is
/// `(1 + i sqrt(d))/2`. Only d = 1 and d = 3 leave a nontrivial y-cap.
pub fn theorem1_bounds(quad: &ImagQuadSpec) -> Theorem1Bounds {
    let d = quad.d();
    match quad.case() {
        QuadCase::A => Theorem1Bounds {
            x_rhs_max: 1,
            // floor(1 / d^(3/2)) = 1 iff d = 1
            y_rhs_max: u32::from(d.is_one()),
        },
        QuadCase::B => Theorem1Bounds {
            x_rhs_max: 8,
            // floor(8 / d^(3/2)) = 1 iff d = 3 (next case-B value is d = 7)
            y_rhs_max: u32::from(*d == BigInt::from(3)),
        },
    }
}

const PHI_VARS: [&str; 10] = ["e1", "e2", "e3", "s1", "s2", "x1", "x2", "y0", "y1", "y2"];

/// The field-independent reduced template: the six-factor product expanded
/// over symbolic roots and rewritten in `e1, e2, e3` (elementary symmetric
/// in the cubic roots) and `s1, s2` (trace and norm of the quadratic
/// generator). Built once per process.
fn universal_template() -> &'static MultiPoly {
    static PHI: OnceLock<MultiPoly> = OnceLock::new();
    PHI.get_or_init(build_universal_template)
}

fn build_universal_template() -> MultiPoly {
    let vars = MultiPoly::make_vars(&[
        "r1", "r2", "r3", "w", "wp", "x1", "x2", "y0", "y1", "y2",
    ]);
    let product = mixed_difference_product(&vars);
    // Symmetric in the cubic roots and in the conjugate pair; rewrite both.
    let reduced_r = symmetric_reduce(&product, &["r1", "r2", "r3"], &["e1", "e2", "e3"])
        .expect("mixed-difference product is symmetric in the cubic roots");
    let reduced = symmetric_reduce(&reduced_r, &["w", "wp"], &["s1", "s2"])
        .expect("mixed-difference product is symmetric in the conjugate pair");
    // Normalize the variable order to PHI_VARS.
    let canonical = reorder(&reduced, &PHI_VARS);
    debug_assert_eq!(passenger_degree(&canonical), 6);
    canonical
}

/// `prod_(j != k) (alpha^(1,j) - alpha^(2,k))` where
/// `alpha^(s,j) = x1 r_j + x2 r_j^2 + y0 w_s + y1 w_s r_j + y2 w_s r_j^2`
/// (the free coordinate cancels in every difference and never appears).
fn mixed_difference_product(vars: &Arc<[String]>) -> MultiPoly {
    let term = |parts: &[(&str, u32)], sign: i64| {
        MultiPoly::monomial(vars.clone(), parts, BigInt::from(sign)).unwrap()
    };
    let conj = |j: usize, w: &'static str| -> MultiPoly {
        let r = ["r1", "r2", "r3"][j];
        let mut acc = MultiPoly::zero(vars.clone());
        acc = &acc + &term(&[("x1", 1), (r, 1)], 1);
        acc = &acc + &term(&[("x2", 1), (r, 2)], 1);
        acc = &acc + &term(&[("y0", 1), (w, 1)], 1);
        acc = &acc + &term(&[("y1", 1), (w, 1), (r, 1)], 1);
        acc = &acc + &term(&[("y2", 1), (w, 1), (r, 2)], 1);
        acc
    };
    let mut product = MultiPoly::constant(vars.clone(), BigInt::one());
    for j in 0..3 {
        for k in 0..3 {
            if j == k {
                continue;
            }
            let factor = &conj(j, "w") - &conj(k, "wp");
            product = &product * &factor;
        }
    }
    product
}

/// Rebuilds `p` over the given variable order (a permutation of its own).
fn reorder(p: &MultiPoly, order: &[&str]) -> MultiPoly {
    let target = MultiPoly::make_vars(order);
    let mut out = MultiPoly::zero(target.clone());
    let positions: Vec<usize> = p
        .vars()
        .iter()
        .map(|v| order.iter().position(|o| o == v).expect("same variable set"))
        .collect();
    for (m, c) in p.iter_terms() {
        let mut parts: Vec<(&str, u32)> = Vec::new();
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                parts.push((order[positions[i]], e));
            }
        }
        out = &out + &MultiPoly::monomial(target.clone(), &parts, c.clone()).unwrap();
    }
    out
}

fn passenger_degree(p: &MultiPoly) -> u32 {
    p.iter_terms()
        .map(|(m, _)| {
            m.0.iter()
                .enumerate()
                .filter(|(i, _)| *i >= 5)
                .map(|(_, &e)| e)
                .sum::<u32>()
        })
        .max()
        .unwrap_or(0)
}

/// Builds `F` for one concrete order by substituting
/// `e1 = -a2, e2 = a1, e3 = -a0, s1 = trace(w), s2 = norm(w)`
/// into the universal template.
pub fn build_f(cubic: &CubicFieldSpec, quad: &ImagQuadSpec) -> IndexFormF {
    let phi = universal_template();
    let consts = [
        ("e1", -cubic.a2()),
        ("e2", cubic.a1().clone()),
        ("e3", -cubic.a0()),
        ("s1", quad.omega_trace().clone()),
        ("s2", quad.omega_norm().clone()),
    ];
    let mut p = phi.clone();
    for (name, value) in consts {
        let vars: Arc<[String]> = p.vars().to_vec().into();
        let replacement = MultiPoly::constant(vars, value);
        p = p.substitute(name, &replacement).expect("template variable");
    }
    let poly = p
        .remove_vars(&["e1", "e2", "e3", "s1", "s2"])
        .expect("all symbol variables substituted away");
    debug_assert_eq!(poly.vars(), F_VARS);
    IndexFormF {
        poly,
        case: quad.case(),
        source: format!("{}, d = {}", cubic.describe(), quad.d()),
    }
}

/// Builds the `(t, d)`-parametric `F` for a family of cubics with
/// coefficients that are polynomials in `t`, paired with the generator
/// `i sqrt(d)` (symbolic square-free d, trace 0, norm d). The other
/// generator shape has a half-integral twist that does not specialize to a
/// single polynomial family, so it is rejected.
pub fn build_f_parametric(
    a2_t: &UniPoly,
    a1_t: &UniPoly,
    a0_t: &UniPoly,
    case: QuadCase,
) -> Result<IndexFormF> {
    if case == QuadCase::B {
        return Err(Error::Unsupported(
            "parametric form only supports the i*sqrt(d) generator (trace 0, norm d)".into(),
        ));
    }
    let phi = universal_template().extend_vars(&["t", "d"]);
    let vars: Arc<[String]> = phi.vars().to_vec().into();
    let in_t = |p: &UniPoly| -> MultiPoly {
        let mut acc = MultiPoly::zero(vars.clone());
        for (k, c) in p.coeffs().iter().enumerate() {
            acc = &acc
                + &MultiPoly::monomial(vars.clone(), &[("t", k as u32)], c.clone()).unwrap();
        }
        acc
    };
    let subs = [
        ("e1", in_t(&-a2_t)),
        ("e2", in_t(a1_t)),
        ("e3", in_t(&-a0_t)),
        ("s1", MultiPoly::zero(vars.clone())),
        ("s2", MultiPoly::var(vars.clone(), "d").unwrap()),
    ];
    let mut p = phi;
    for (name, replacement) in subs {
        p = p.substitute(name, &replacement).expect("template variable");
    }
    let poly = p.remove_vars(&["e1", "e2", "e3", "s1", "s2"])?;
    Ok(IndexFormF {
        poly,
        case,
        source: format!(
            "family x^3 + ({})x^2 + ({})x + ({}), symbolic d",
            a2_t, a1_t, a0_t
        ),
    })
}

impl IndexFormF {
    /// Evaluates a numeric (non-parametric) form at `(x1, x2, y0, y1, y2)`.
    pub fn eval(&self, v: &[BigInt; 5]) -> BigInt {
        assert_eq!(
            self.poly.vars(),
            F_VARS,
            "eval expects the five-variable numeric form"
        );
        self.poly.eval(&v.clone())
    }

    /// One term per line, `coeff monomial`, leading term first.
    pub fn canonical_text(&self) -> String {
        self.poly.canonical_text()
    }
}
