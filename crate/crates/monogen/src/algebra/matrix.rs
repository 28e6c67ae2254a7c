//! Dense integer matrices: exact determinants (Bareiss) and characteristic
//! polynomials (Faddeev-LeVerrier). Sizes here are tiny (at most the 6x6
//! multiplication matrices and ~10x10 Sylvester blocks), so no pivoting
//! strategy beyond zero avoidance is needed.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::unipoly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IMat {
    n: usize,
    data: Vec<BigInt>,
}

impl IMat {
    pub fn zeros(n: usize) -> Self {
        IMat {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.n + j] = v;
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn mul(&self, rhs: &IMat) -> IMat {
        assert_eq!(self.n, rhs.n);
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add_scaled_identity(&self, c: &BigInt) -> IMat {
        let mut out = self.clone();
        for i in 0..self.n {
            let v = out.get(i, i) + c;
            out.set(i, i, v);
        }
        out
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let pivot = (k + 1..n).find(|&l| !m.get(l, k).is_zero());
                match pivot {
                    None => return BigInt::zero(),
                    Some(l) => {
                        for j in 0..n {
                            let a = m.get(k, j).clone();
                            let b = m.get(l, j).clone();
                            m.set(k, j, b);
                            m.set(l, j, a);
                        }
                        sign = -sign;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j);
                    use num_integer::Integer;
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    m.set(i, j, q);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Monic characteristic polynomial of the matrix, `det(x I - A)`,
    /// by the Faddeev-LeVerrier recurrence (all divisions exact over Z).
    pub fn char_poly(&self, var: &str) -> UniPoly {
        let n = self.n;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut acc = IMat::identity(n);
        for k in 1..=n {
            let mk = self.mul(&acc);
            let t = mk.trace();
            use num_integer::Integer;
            let (ak, r) = (-t).div_rem(&BigInt::from(k as u64));
            assert!(r.is_zero(), "Faddeev-LeVerrier trace division must be exact");
            coeffs[n - k] = ak.clone();
            acc = mk.add_scaled_identity(&ak);
        }
        UniPoly::new(var, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn random_mat(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> IMat {
        let mut m = IMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, BigInt::from(rng.random_range(lo..=hi)));
            }
        }
        m
    }

    /// Cofactor-expansion determinant over UniPoly entries; the test oracle
    /// for both `determinant` and `char_poly`.
    fn poly_mat_det(entries: &[Vec<UniPoly>]) -> UniPoly {
        let n = entries.len();
        if n == 1 {
            return entries[0][0].clone();
        }
        let var = entries[0][0].var_name().to_string();
        let mut acc = UniPoly::zero(var.clone());
        for j in 0..n {
            if entries[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<UniPoly>> = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| entries[i][c].clone())
                        .collect()
                })
                .collect();
            let term = &entries[0][j] * &poly_mat_det(&minor);
            if j % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        acc
    }

    fn char_poly_oracle(m: &IMat) -> UniPoly {
        let n = m.size();
        let entries: Vec<Vec<UniPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut coeffs = vec![-m.get(i, j).clone()];
                        if i == j {
                            coeffs.push(BigInt::one());
                        }
                        UniPoly::new("x", coeffs)
                    })
                    .collect()
            })
            .collect();
        poly_mat_det(&entries)
    }

    #[test]
    fn determinant_small_cases() {
        let mut m = IMat::zeros(2);
        m.set(0, 0, BigInt::from(2));
        m.set(0, 1, BigInt::from(3));
        m.set(1, 0, BigInt::from(5));
        m.set(1, 1, BigInt::from(7));
        assert_eq!(m.determinant(), BigInt::from(-1));
        assert_eq!(IMat::identity(5).determinant(), BigInt::one());
        assert_eq!(IMat::zeros(3).determinant(), BigInt::zero());
    }

    #[test]
    fn determinant_matches_cofactor_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.random_range(1..=5usize);
            let m = random_mat(&mut rng, n, -6, 6);
            let entries: Vec<Vec<UniPoly>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| UniPoly::new("x", vec![m.get(i, j).clone()]))
                        .collect()
                })
                .collect();
            let oracle = poly_mat_det(&entries);
            let det = m.determinant();
            if oracle.is_zero() {
                assert!(det.is_zero());
            } else {
                assert_eq!(det, oracle.coeff(0));
            }
        }
    }

    #[test]
    fn char_poly_matches_cofactor_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..40 {
            let n = rng.random_range(1..=6usize);
            let m = random_mat(&mut rng, n, -4, 4);
            assert_eq!(m.char_poly("x"), char_poly_oracle(&m), "n = {n}");
        }
    }

    #[test]
    fn char_poly_constant_term_is_signed_determinant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..30 {
            let n = rng.random_range(1..=6usize);
            let m = random_mat(&mut rng, n, -5, 5);
            let chi = m.char_poly("x");
            let sign = if n % 2 == 1 { -1 } else { 1 };
            assert_eq!(chi.coeff(0), m.determinant() * BigInt::from(sign));
        }
    }
}
