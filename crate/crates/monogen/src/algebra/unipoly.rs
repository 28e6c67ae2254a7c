//! Dense univariate polynomials over the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A univariate polynomial with arbitrary-precision integer coefficients,
/// stored by ascending degree. The zero polynomial has an empty coefficient
/// vector; otherwise the leading coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    var: String,
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(var: impl Into<String>, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly {
            var: var.into(),
            coeffs,
        }
    }

    pub fn from_i64(var: impl Into<String>, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(var: impl Into<String>) -> Self {
        UniPoly {
            var: var.into(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(var: impl Into<String>, c: BigInt) -> Self {
        Self::new(var, vec![c])
    }

    /// The monomial `x` in the given variable.
    pub fn identity(var: impl Into<String>) -> Self {
        Self::new(var, vec![BigInt::zero(), BigInt::one()])
    }

    pub fn var_name(&self) -> &str {
        &self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of the degree-`k` term (zero if absent).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(self.var.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        UniPoly::new(self.var.clone(), coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> UniPoly {
        UniPoly::new(self.var.clone(), self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Composition `self(g(x))`, exact over the integers.
    pub fn compose(&self, g: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero(g.var.clone());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &UniPoly::constant(g.var.clone(), c.clone());
        }
        acc
    }

    /// Translation `self(x + a)`.
    pub fn shift(&self, a: &BigInt) -> UniPoly {
        let x_plus_a = UniPoly::new(self.var.clone(), vec![a.clone(), BigInt::one()]);
        self.compose(&x_plus_a)
    }

    /// Greatest common divisor of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `c`, asserting exactness.
    pub fn exact_div_scalar(&self, c: &BigInt) -> UniPoly {
        assert!(!c.is_zero(), "division by zero scalar");
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                use num_integer::Integer;
                let (q, r) = a.div_rem(c);
                assert!(r.is_zero(), "inexact scalar division in UniPoly");
                q
            })
            .collect();
        UniPoly::new(self.var.clone(), coeffs)
    }

    /// Remainder of `lc(d)^(deg self - deg d + 1) * self` under division by `d`
    /// (the pseudo-remainder, which keeps everything in integers).
    pub fn pseudo_rem(&self, d: &UniPoly) -> UniPoly {
        let dd = d.degree().expect("pseudo_rem by zero polynomial");
        let mut r = self.clone();
        let lc = d.leading().unwrap().clone();
        let mut steps = match r.degree() {
            Some(dr) if dr >= dd => dr - dd + 1,
            _ => 0,
        };
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let top = r.leading().unwrap().clone();
            // r <- lc * r - top * x^(dr-dd) * d
            let mut coeffs = vec![BigInt::zero(); dr + 1];
            for (k, c) in r.coeffs.iter().enumerate() {
                coeffs[k] = c * &lc;
            }
            for (k, c) in d.coeffs.iter().enumerate() {
                coeffs[k + dr - dd] -= c * &top;
            }
            r = UniPoly::new(self.var.clone(), coeffs);
            steps -= 1;
        }
        // Pad with the remaining lc powers so the result matches the
        // textbook pseudo-remainder regardless of degree drops.
        for _ in 0..steps {
            r = r.scale(&lc);
        }
        r
    }

    fn check_var(&self, other: &UniPoly) {
        assert_eq!(
            self.var, other.var,
            "univariate arithmetic across different variables"
        );
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.check_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        UniPoly::new(self.var.clone(), coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.check_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        UniPoly::new(self.var.clone(), coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.check_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.var.clone());
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(self.var.clone(), coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.var.clone(), self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if k == 1 {
                    write!(f, "{}", self.var)?;
                } else {
                    write!(f, "{}^{}", self.var, k)?;
                }
            }
        }
        Ok(())
    }
}
