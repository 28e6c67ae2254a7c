//! The two base fields: a monic totally real cubic and an imaginary
//! quadratic field given by a positive square-free integer d.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{integer_roots, poly_discriminant, UniPoly};
use crate::error::{Error, Result};

/// A monic irreducible cubic `x^3 + a2 x^2 + a1 x + a0` over Z with three
/// real roots (positive discriminant), the defining data of the cubic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicFieldSpec {
    a2: BigInt,
    a1: BigInt,
    a0: BigInt,
    disc: BigInt,
}

impl CubicFieldSpec {
    pub fn new(a2: BigInt, a1: BigInt, a0: BigInt) -> Result<Self> {
        let f = UniPoly::new("x", vec![a0.clone(), a1.clone(), a2.clone(), BigInt::one()]);
        // A monic cubic is reducible over Q exactly when it has an integer root.
        let roots = integer_roots(&f)?;
        if let Some(r) = roots.into_iter().next() {
            return Err(Error::ReduciblePolynomial(a2, a1, a0, r));
        }
        let disc = poly_discriminant(&f)?;
        if !disc.is_positive() {
            return Err(Error::NotTotallyReal(disc));
        }
        Ok(CubicFieldSpec { a2, a1, a0, disc })
    }

    pub fn from_i64(a2: i64, a1: i64, a0: i64) -> Result<Self> {
        Self::new(BigInt::from(a2), BigInt::from(a1), BigInt::from(a0))
    }

    pub fn a2(&self) -> &BigInt {
        &self.a2
    }

    pub fn a1(&self) -> &BigInt {
        &self.a1
    }

    pub fn a0(&self) -> &BigInt {
        &self.a0
    }

    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    pub fn min_poly(&self) -> UniPoly {
        UniPoly::new(
            "x",
            vec![
                self.a0.clone(),
                self.a1.clone(),
                self.a2.clone(),
                BigInt::one(),
            ],
        )
    }

    pub fn describe(&self) -> String {
        self.min_poly().to_string()
    }
}

/// Which residue class -d falls in mod 4; it determines the shape of the
/// quadratic generator and everything derived from it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadCase {
    /// -d = 2, 3 (mod 4): generator i*sqrt(d), trace 0, norm d, disc -4d.
    A,
    /// -d = 1 (mod 4): generator (1 + i*sqrt(d))/2, trace 1, norm (1+d)/4,
    /// disc -d.
    B,
}

/// An imaginary quadratic field, described by its square-free d > 0 together
/// with the trace/norm of its integral generator and the field discriminant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImagQuadSpec {
    d: BigInt,
    case: QuadCase,
    omega_trace: BigInt,
    omega_norm: BigInt,
    disc_m: BigInt,
}

impl ImagQuadSpec {
    pub fn new(d: BigInt) -> Result<Self> {
        if !d.is_positive() || !is_square_free(&d) {
            return Err(Error::BadQuadraticD(d));
        }
        let four = BigInt::from(4);
        // -d = 1 (mod 4) is d = 3 (mod 4); square-free d is never 0 (mod 4).
        let case = if d.mod_floor(&four) == BigInt::from(3) {
            QuadCase::B
        } else {
            QuadCase::A
        };
        let (omega_trace, omega_norm, disc_m) = match case {
            QuadCase::A => (BigInt::zero(), d.clone(), -&four * &d),
            QuadCase::B => {
                let (n, r) = (BigInt::one() + &d).div_rem(&four);
                debug_assert!(r.is_zero());
                (BigInt::one(), n, -d.clone())
            }
        };
        Ok(ImagQuadSpec {
            d,
            case,
            omega_trace,
            omega_norm,
            disc_m,
        })
    }

    pub fn from_i64(d: i64) -> Result<Self> {
        Self::new(BigInt::from(d))
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn case(&self) -> QuadCase {
        self.case
    }

    pub fn omega_trace(&self) -> &BigInt {
        &self.omega_trace
    }

    pub fn omega_norm(&self) -> &BigInt {
        &self.omega_norm
    }

    pub fn disc_m(&self) -> &BigInt {
        &self.disc_m
    }
}

/// Square-free test by trial division up to 10^6 plus a perfect-square check
/// on the remaining cofactor. Complete for all d below 10^18 (a repeated
/// prime above the trial bound would force d beyond that).
fn is_square_free(n: &BigInt) -> bool {
    let mut m = n.abs();
    if m.is_zero() {
        return false;
    }
    let mut p = BigInt::from(2);
    let cap = BigInt::from(1_000_000u32);
    while &p * &p <= m && p <= cap {
        if (&m % &p).is_zero() {
            m /= &p;
            if (&m % &p).is_zero() {
                return false;
            }
        }
        p += if p == BigInt::from(2) { 1u8 } else { 2u8 };
    }
    if m.is_one() {
        return true;
    }
    let s = m.sqrt();
    &s * &s != m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disc_49_cubic_accepted() {
        let spec = CubicFieldSpec::from_i64(-1, -2, 1).unwrap();
        assert_eq!(spec.disc(), &BigInt::from(49));
    }

    #[test]
    fn reducible_cubic_rejected() {
        // x^3 - 1 has the integer root 1
        let err = CubicFieldSpec::from_i64(0, 0, -1).unwrap_err();
        match err {
            Error::ReduciblePolynomial(_, _, _, r) => assert_eq!(r, BigInt::from(1)),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn non_totally_real_rejected() {
        // x^3 + x + 1: disc = -4 - 27 = -31 < 0
        let err = CubicFieldSpec::from_i64(0, 1, 1).unwrap_err();
        match err {
            Error::NotTotallyReal(d) => assert_eq!(d, BigInt::from(-31)),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn gaussian_case() {
        let q = ImagQuadSpec::from_i64(1).unwrap();
        assert_eq!(q.case(), QuadCase::A);
        assert_eq!(q.disc_m(), &BigInt::from(-4));
        assert_eq!(q.omega_trace(), &BigInt::zero());
        assert_eq!(q.omega_norm(), &BigInt::one());
    }

    #[test]
    fn euler_case() {
        let q = ImagQuadSpec::from_i64(3).unwrap();
        assert_eq!(q.case(), QuadCase::B);
        assert_eq!(q.omega_norm(), &BigInt::one());
        assert_eq!(q.disc_m(), &BigInt::from(-3));
    }

    #[test]
    fn non_square_free_rejected() {
        assert!(ImagQuadSpec::from_i64(4).is_err());
        assert!(ImagQuadSpec::from_i64(12).is_err());
        assert!(ImagQuadSpec::from_i64(0).is_err());
        assert!(ImagQuadSpec::from_i64(-3).is_err());
        assert!(ImagQuadSpec::from_i64(9 * 999_983).is_err());
    }

    #[test]
    fn square_free_cases() {
        for d in [1i64, 2, 3, 5, 6, 7, 10, 30, 999_983] {
            assert!(ImagQuadSpec::from_i64(d).is_ok(), "d = {d}");
        }
    }
}
