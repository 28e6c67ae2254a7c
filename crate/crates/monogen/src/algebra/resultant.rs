//! Resultants and discriminants of integer polynomials via a primitive
//! polynomial-remainder sequence with exact scale accounting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Resultant with the Sylvester-matrix sign convention:
/// `Res(f, g) = lc(f)^deg(g) * prod g(alpha)` over the roots `alpha` of `f`.
///
/// Computed by a pseudo-remainder sequence; each remainder is divided by its
/// content, and the discarded factors are tracked exactly as a rational
/// scale, so no coefficient ever leaves the integers except in that
/// bookkeeping (whose final division is exact).
pub fn poly_resultant(f: &UniPoly, g: &UniPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial("resultant"));
    }
    if f.var_name() != g.var_name() {
        return Err(Error::VariableMismatch(
            f.var_name().to_string(),
            g.var_name().to_string(),
        ));
    }

    // Scale accumulator: the true resultant is num/den * res(core pair).
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let mut a = f.clone();
    let mut b = g.clone();

    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();

        if da == 0 && db == 0 {
            // Two constants: empty Sylvester matrix, resultant 1.
            return finish(num, den, BigInt::one());
        }
        if db == 0 {
            // Res(a, c) = c^deg(a)
            let r = pow(b.leading().unwrap(), da as u32);
            return finish(num, den, r);
        }
        if da == 0 {
            // Res(c, b) = c^deg(b)
            let r = pow(a.leading().unwrap(), db as u32);
            return finish(num, den, r);
        }
        if da < db {
            // Res(a, b) = (-1)^(da*db) Res(b, a)
            if da & 1 == 1 && db & 1 == 1 {
                num = -num;
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }

        // Pseudo-remainder step: lc(b)^(da-db+1) a = q b + r.
        let mut r = a.pseudo_rem(&b);
        if r.is_zero() {
            // deg(b) >= 1 and b divides a power-scaled a: common root.
            return Ok(BigInt::zero());
        }
        // Strip the content of r and account for it: Res(b, c*r') = c^db Res(b, r').
        let cont = r.content();
        if !cont.is_one() {
            r = r.exact_div_scalar(&cont);
        }
        let dr = r.degree().unwrap();
        let lcb = b.leading().unwrap().clone();

        // Res(a, b) = (-1)^(da*db) lc(b)^(da - dr - (da-db+1)*db) cont^db Res(b, r)
        if da & 1 == 1 && db & 1 == 1 {
            num = -num;
        }
        let e: i64 = da as i64 - dr as i64 - (da as i64 - db as i64 + 1) * db as i64;
        if e >= 0 {
            num *= pow(&lcb, e as u32);
        } else {
            den *= pow(&lcb, (-e) as u32);
        }
        num *= pow(&cont, db as u32);

        a = b;
        b = r;
    }
}

fn pow(base: &BigInt, e: u32) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

fn finish(num: BigInt, den: BigInt, core: BigInt) -> Result<BigInt> {
    let (q, r) = (num * core).div_rem(&den);
    assert!(r.is_zero(), "resultant scale division must be exact");
    Ok(q)
}

/// Discriminant `(-1)^(n(n-1)/2) Res(f, f') / lc(f)` for `deg f >= 2`.
pub fn poly_discriminant(f: &UniPoly) -> Result<BigInt> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("discriminant"));
    }
    let n = f.degree().unwrap();
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    let res = poly_resultant(f, &f.derivative())?;
    let lc = f.leading().unwrap();
    let (q, r) = res.div_rem(lc);
    assert!(r.is_zero(), "Res(f, f') must be divisible by lc(f)");
    if (n * (n - 1) / 2) % 2 == 1 {
        Ok(-q)
    } else {
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64("x", coeffs)
    }

    /// Sylvester matrix determinant, the independent oracle for the PRS route.
    pub(crate) fn sylvester_resultant(f: &UniPoly, g: &UniPoly) -> BigInt {
        let m = f.degree().unwrap();
        let n = g.degree().unwrap();
        if m == 0 && n == 0 {
            return BigInt::one();
        }
        let size = m + n;
        let mut mat = crate::algebra::matrix::IMat::zeros(size);
        for row in 0..n {
            for k in 0..=m {
                mat.set(row, row + k, f.coeff(m - k));
            }
        }
        for row in 0..m {
            for k in 0..=n {
                mat.set(n + row, row + k, g.coeff(n - k));
            }
        }
        mat.determinant()
    }

    #[test]
    fn linear_factor_convention() {
        // Res(x^2 - 1, x - 2) = (1-2)(-1-2) = 3
        let f = p(&[-1, 0, 1]);
        let g = p(&[-2, 1]);
        assert_eq!(poly_resultant(&f, &g).unwrap(), BigInt::from(3));
    }

    #[test]
    fn constant_second_argument() {
        // Res(f, 1) = 1 for positive-degree f
        let f = p(&[4, 0, -3, 7, 1]);
        assert_eq!(poly_resultant(&f, &p(&[1])).unwrap(), BigInt::one());
    }

    #[test]
    fn derivative_resultant_of_disc_49_cubic() {
        // f = x^3 - x^2 - 2x + 1, f' = 3x^2 - 2x - 2. The Sylvester-sign
        // resultant is -49; the discriminant is +49.
        let f = p(&[1, -2, -1, 1]);
        let fp = p(&[-2, -2, 3]);
        assert_eq!(fp, f.derivative());
        let res = poly_resultant(&f, &fp).unwrap();
        assert_eq!(res, BigInt::from(-49));
        assert_eq!(res, sylvester_resultant(&f, &fp));
        assert_eq!(poly_discriminant(&f).unwrap(), BigInt::from(49));
    }

    #[test]
    fn quadratic_discriminant() {
        // disc(x^2 + 1) = -4
        assert_eq!(poly_discriminant(&p(&[1, 0, 1])).unwrap(), BigInt::from(-4));
    }

    #[test]
    fn family_member_discriminant_positive() {
        // x^3 - 14x^2 + 24x + 1: value checked against the Sylvester oracle;
        // it must be positive (three real roots).
        let f = p(&[1, 24, -14, 1]);
        let d = poly_discriminant(&f).unwrap();
        let oracle = -sylvester_resultant(&f, &f.derivative());
        assert_eq!(d, oracle);
        assert_eq!(d, BigInt::from(62501));
        assert!(d > BigInt::zero());
    }

    #[test]
    fn zero_polynomial_rejected() {
        let z = UniPoly::zero("x");
        assert!(poly_resultant(&z, &p(&[1, 1])).is_err());
        assert!(poly_discriminant(&p(&[3, 1])).is_err());
    }

    #[test]
    fn matches_sylvester_on_random_inputs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5e5u64);
        for _ in 0..400 {
            let df = rng.random_range(0..=5usize);
            let dg = rng.random_range(0..=5usize);
            let f = random_poly(&mut rng, df);
            let g = random_poly(&mut rng, dg);
            if f.is_zero() || g.is_zero() {
                continue;
            }
            let prs = poly_resultant(&f, &g).unwrap();
            let syl = sylvester_resultant(&f, &g);
            assert_eq!(prs, syl, "PRS vs Sylvester mismatch for f={f}, g={g}");
        }
    }

    #[test]
    fn multiplicative_in_second_argument() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xabcdu64);
        for _ in 0..200 {
            let f = random_nonzero(&mut rng, 3);
            let g = random_nonzero(&mut rng, 2);
            let h = random_nonzero(&mut rng, 2);
            let lhs = poly_resultant(&f, &(&g * &h)).unwrap();
            let rhs = poly_resultant(&f, &g).unwrap() * poly_resultant(&f, &h).unwrap();
            assert_eq!(lhs, rhs, "Res(f, gh) != Res(f,g)Res(f,h) for f={f}, g={g}, h={h}");
        }
    }

    #[test]
    fn discriminant_translation_invariant() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7u64);
        for _ in 0..100 {
            let deg = rng.random_range(2..=4usize);
            let f = random_nonzero(&mut rng, deg);
            if f.degree().unwrap() < 2 {
                continue;
            }
            let a = BigInt::from(rng.random_range(-20i64..=20));
            let shifted = f.shift(&a);
            assert_eq!(
                poly_discriminant(&f).unwrap(),
                poly_discriminant(&shifted).unwrap(),
                "disc not translation invariant for f={f}, a={a}"
            );
        }
    }

    fn random_poly(rng: &mut impl rand::Rng, deg: usize) -> UniPoly {
        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.random_range(-9i64..=9)).collect();
        UniPoly::from_i64("x", &coeffs)
    }

    fn random_nonzero(rng: &mut impl rand::Rng, deg: usize) -> UniPoly {
        loop {
            let f = random_poly(rng, deg);
            if !f.is_zero() {
                return f;
            }
        }
    }
}
