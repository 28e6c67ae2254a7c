//! Binary cubic norm forms attached to the cubic field, and the cubic-field
//! norm of a quadratic expression in the generator.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::fields::{CubicFieldSpec, ImagQuadSpec};
use super::quadint::QuadInt;
use crate::algebra::{poly_resultant, UniPoly};

/// `c3 x^3 + c2 x^2 y + c1 x y^2 + c0 y^3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCubicForm {
    pub c3: BigInt,
    pub c2: BigInt,
    pub c1: BigInt,
    pub c0: BigInt,
}

impl BinaryCubicForm {
    pub fn new(c3: BigInt, c2: BigInt, c1: BigInt, c0: BigInt) -> Self {
        BinaryCubicForm { c3, c2, c1, c0 }
    }

    pub fn from_i64(c3: i64, c2: i64, c1: i64, c0: i64) -> Self {
        Self::new(
            BigInt::from(c3),
            BigInt::from(c2),
            BigInt::from(c1),
            BigInt::from(c0),
        )
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        ((&self.c3 * x + &self.c2 * y) * x + &self.c1 * y * y) * x + &self.c0 * y * y * y
    }

    /// Evaluation with quadratic-integer arguments; the coefficients act as
    /// rational integers. Valid because the form identity holds over any
    /// commutative ring.
    pub fn eval_quadint(&self, x: &QuadInt, y: &QuadInt, quad: &ImagQuadSpec) -> QuadInt {
        // Horner in x: ((c3 x + c2 y) x + c1 y^2) x + c0 y^3.
        let y2 = y.mul(y, quad);
        let mut acc = x.mul_int(&self.c3).add(&y.mul_int(&self.c2));
        acc = acc.mul(x, quad).add(&y2.mul_int(&self.c1));
        acc.mul(x, quad).add(&y2.mul(y, quad).mul_int(&self.c0))
    }

    /// The dehomogenization `form(x, 1)` as a univariate polynomial.
    pub fn dehomogenize(&self, var: &str) -> UniPoly {
        UniPoly::new(
            var,
            vec![
                self.c0.clone(),
                self.c1.clone(),
                self.c2.clone(),
                self.c3.clone(),
            ],
        )
    }

    /// Discriminant of the binary cubic,
    /// `18 c3 c2 c1 c0 - 4 c2^3 c0 + c2^2 c1^2 - 4 c3 c1^3 - 27 c3^2 c0^2`.
    pub fn disc(&self) -> BigInt {
        let BinaryCubicForm { c3, c2, c1, c0 } = self;
        BigInt::from(18) * c3 * c2 * c1 * c0 - BigInt::from(4) * c2 * c2 * c2 * c0
            + c2 * c2 * c1 * c1
            - BigInt::from(4) * c3 * c1 * c1 * c1
            - BigInt::from(27) * c3 * c3 * c0 * c0
    }
}

/// The norm form of `u - (a2 + t)v` over the cubic field with generator `t`:
/// the homogenization of `f(X - a2)`. Monic in `u`.
pub fn norm_form_shifted(cubic: &CubicFieldSpec) -> BinaryCubicForm {
    let shifted = cubic.min_poly().shift(&-cubic.a2());
    debug_assert_eq!(shifted.degree(), Some(3));
    BinaryCubicForm::new(
        shifted.coeff(3),
        shifted.coeff(2),
        shifted.coeff(1),
        shifted.coeff(0),
    )
}

/// The norm form of `x - t y`: `x^3 + a2 x^2 y + a1 x y^2 + a0 y^3`,
/// i.e. `y^3 f(x/y)`.
pub fn norm_form_theta(cubic: &CubicFieldSpec) -> BinaryCubicForm {
    BinaryCubicForm::new(
        BigInt::one(),
        cubic.a2().clone(),
        cubic.a1().clone(),
        cubic.a0().clone(),
    )
}

/// Norm of `y0 + y1 t + y2 t^2` down to Q: the resultant of the minimal
/// polynomial with the quadratic expression (exact sign, since the minimal
/// polynomial is monic). The zero element has norm zero.
pub fn norm_l_element(cubic: &CubicFieldSpec, y0: &BigInt, y1: &BigInt, y2: &BigInt) -> BigInt {
    let g = UniPoly::new("x", vec![y0.clone(), y1.clone(), y2.clone()]);
    if g.is_zero() {
        return BigInt::zero();
    }
    poly_resultant(&cubic.min_poly(), &g).expect("both polynomials nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sec42_cubic() -> CubicFieldSpec {
        CubicFieldSpec::from_i64(-1, -2, 1).unwrap()
    }

    #[test]
    fn shifted_form_of_disc_49_field() {
        // a2 = -1: homogenization of f(X + 1) = X^3 + 2X^2 - X - 1
        let s = norm_form_shifted(&sec42_cubic());
        assert_eq!(s, BinaryCubicForm::from_i64(1, 2, -1, -1));
        assert_eq!(s.eval(&BigInt::one(), &BigInt::zero()), BigInt::one());
    }

    #[test]
    fn theta_form_of_family_member() {
        // t = 2 member: x^3 - 14 x^2 y + 24 x y^2 + y^3
        let f2 = CubicFieldSpec::from_i64(-14, 24, 1).unwrap();
        let th = norm_form_theta(&f2);
        assert_eq!(th, BinaryCubicForm::from_i64(1, -14, 24, 1));
        assert_eq!(th.eval(&BigInt::one(), &BigInt::zero()), BigInt::one());
        // known unit points at t = 2
        for (x, y) in [(1i64, 0i64), (0, 1), (2, 1), (12, 1), (-7, 172)] {
            assert_eq!(
                th.eval(&BigInt::from(x), &BigInt::from(y)),
                BigInt::one(),
                "({x},{y})"
            );
        }
    }

    #[test]
    fn outlier_member_extra_solution() {
        // t = -1 member x^3 - 2x^2 - 3x + 1 takes the value 1 at (6, -5)
        let fm1 = CubicFieldSpec::from_i64(-2, -3, 1).unwrap();
        let th = norm_form_theta(&fm1);
        assert_eq!(
            th.eval(&BigInt::from(6), &BigInt::from(-5)),
            BigInt::one()
        );
    }

    #[test]
    fn shift_identity_links_the_two_forms() {
        // shifted(x + a2 y, y) = theta(x, y)
        for (a2, a1, a0) in [(-1i64, -2i64, 1i64), (-14, 24, 1), (-78, 225, 1)] {
            let cubic = CubicFieldSpec::from_i64(a2, a1, a0).unwrap();
            let s = norm_form_shifted(&cubic);
            let th = norm_form_theta(&cubic);
            for x in -6i64..=6 {
                for y in -6i64..=6 {
                    let lx = BigInt::from(x) + cubic.a2() * BigInt::from(y);
                    assert_eq!(
                        s.eval(&lx, &BigInt::from(y)),
                        th.eval(&BigInt::from(x), &BigInt::from(y)),
                        "a2={a2} ({x},{y})"
                    );
                }
            }
        }
    }

    #[test]
    fn quadint_evaluation_matches_integer_evaluation() {
        let quad = ImagQuadSpec::from_i64(5).unwrap();
        let s = norm_form_shifted(&sec42_cubic());
        for (x, y) in [(3i64, -2i64), (0, 1), (-4, 5)] {
            let plain = s.eval(&BigInt::from(x), &BigInt::from(y));
            let qi = s.eval_quadint(
                &QuadInt::from_i64(x, 0),
                &QuadInt::from_i64(y, 0),
                &quad,
            );
            assert_eq!(qi, QuadInt::new(plain, BigInt::zero()));
        }
    }

    #[test]
    fn quadint_evaluation_with_true_quadratic_arguments() {
        // Pure cube form, Gaussian case: (1 + w)^3 = -2 + 2w when w^2 = -1.
        let quad = ImagQuadSpec::from_i64(1).unwrap();
        let cube = BinaryCubicForm::from_i64(1, 0, 0, 0);
        let v = cube.eval_quadint(&QuadInt::from_i64(1, 1), &QuadInt::from_i64(9, -7), &quad);
        assert_eq!(v, QuadInt::from_i64(-2, 2));
        // Full form, checked against a hand expansion with y = w, x = 1:
        // f(1, w) = c3 + c2 w + c1 w^2 + c0 w^3 = (c3 - c1) + (c2 - c0) w.
        let form = BinaryCubicForm::from_i64(2, 3, 5, 7);
        let v = form.eval_quadint(&QuadInt::from_i64(1, 0), &QuadInt::from_i64(0, 1), &quad);
        assert_eq!(v, QuadInt::from_i64(-3, -4));
    }

    #[test]
    fn norm_of_quadratic_expressions() {
        let cubic = sec42_cubic();
        // N(y0) = y0^3
        assert_eq!(
            norm_l_element(&cubic, &BigInt::from(5), &BigInt::zero(), &BigInt::zero()),
            BigInt::from(125)
        );
        // N(1 - t) = f(1) = -1
        assert_eq!(
            norm_l_element(&cubic, &BigInt::one(), &BigInt::from(-1), &BigInt::zero()),
            BigInt::from(-1)
        );
        // N(t) = -a0 = -1
        assert_eq!(
            norm_l_element(&cubic, &BigInt::zero(), &BigInt::one(), &BigInt::zero()),
            BigInt::from(-1)
        );
        // zero element
        assert_eq!(
            norm_l_element(&cubic, &BigInt::zero(), &BigInt::zero(), &BigInt::zero()),
            BigInt::zero()
        );
    }

    #[test]
    fn form_disc_matches_polynomial_disc() {
        use crate::algebra::poly_discriminant;
        let th = norm_form_theta(&CubicFieldSpec::from_i64(-14, 24, 1).unwrap());
        assert_eq!(
            th.disc(),
            poly_discriminant(&th.dehomogenize("x")).unwrap()
        );
        assert_eq!(th.disc(), BigInt::from(62501));
    }

    #[test]
    fn odd_under_joint_negation() {
        let s = norm_form_shifted(&sec42_cubic());
        for x in -4i64..=4 {
            for y in -4i64..=4 {
                assert_eq!(
                    s.eval(&BigInt::from(-x), &BigInt::from(-y)),
                    -s.eval(&BigInt::from(x), &BigInt::from(y))
                );
            }
        }
    }
}
