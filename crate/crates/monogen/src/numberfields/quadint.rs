//! Integers of the imaginary quadratic field, written `a + b*w` where `w`
//! is the integral generator with `w^2 = trace(w)*w - norm(w)`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::fields::ImagQuadSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: BigInt, b: BigInt) -> Self {
        QuadInt { a, b }
    }

    pub fn zero() -> Self {
        QuadInt {
            a: BigInt::zero(),
            b: BigInt::zero(),
        }
    }

    pub fn from_i64(a: i64, b: i64) -> Self {
        QuadInt::new(BigInt::from(a), BigInt::from(b))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, rhs: &QuadInt) -> QuadInt {
        QuadInt::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }

    pub fn sub(&self, rhs: &QuadInt) -> QuadInt {
        QuadInt::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }

    pub fn neg(&self) -> QuadInt {
        QuadInt::new(-&self.a, -&self.b)
    }

    /// Product under `w^2 = t*w - n`:
    /// `(a + bw)(c + ew) = (ac - be n) + (ae + bc + be t) w`.
    pub fn mul(&self, rhs: &QuadInt, quad: &ImagQuadSpec) -> QuadInt {
        let be = &self.b * &rhs.b;
        let a = &self.a * &rhs.a - &be * quad.omega_norm();
        let b = &self.a * &rhs.b + &self.b * &rhs.a + &be * quad.omega_trace();
        QuadInt::new(a, b)
    }

    pub fn mul_int(&self, c: &BigInt) -> QuadInt {
        QuadInt::new(&self.a * c, &self.b * c)
    }

    /// Galois conjugate: `a + b w' = (a + b t) - b w`.
    pub fn conj(&self, quad: &ImagQuadSpec) -> QuadInt {
        QuadInt::new(&self.a + &self.b * quad.omega_trace(), -&self.b)
    }

    /// Field norm `z * z' = a^2 + a b t + b^2 n`, a rational integer.
    pub fn norm(&self, quad: &ImagQuadSpec) -> BigInt {
        &self.a * &self.a
            + &self.a * &self.b * quad.omega_trace()
            + &self.b * &self.b * quad.omega_norm()
    }
}
