//! The rank-6 order `Z[1, t, t^2, w, w t, w t^2]`, its multiplication table,
//! characteristic polynomials, element indices, and the two norm factors of
//! the index factorization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::fields::{CubicFieldSpec, ImagQuadSpec};
use super::forms::{norm_form_shifted, norm_l_element};
use super::quadint::QuadInt;
use crate::algebra::{poly_discriminant, IMat, UniPoly};

/// Integer coordinates of an element with respect to the basis
/// `(1, t, t^2, w, w t, w t^2)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ElementCoords {
    pub x0: BigInt,
    pub x1: BigInt,
    pub x2: BigInt,
    pub y0: BigInt,
    pub y1: BigInt,
    pub y2: BigInt,
}

impl ElementCoords {
    pub fn new(x0: BigInt, x1: BigInt, x2: BigInt, y0: BigInt, y1: BigInt, y2: BigInt) -> Self {
        ElementCoords {
            x0,
            x1,
            x2,
            y0,
            y1,
            y2,
        }
    }

    pub fn from_i64(v: [i64; 6]) -> Self {
        let [x0, x1, x2, y0, y1, y2] = v;
        Self::new(
            BigInt::from(x0),
            BigInt::from(x1),
            BigInt::from(x2),
            BigInt::from(y0),
            BigInt::from(y1),
            BigInt::from(y2),
        )
    }

    /// The five coordinates the index depends on (everything but `x0`).
    pub fn from_five(v: &[BigInt; 5]) -> Self {
        Self::new(
            BigInt::zero(),
            v[0].clone(),
            v[1].clone(),
            v[2].clone(),
            v[3].clone(),
            v[4].clone(),
        )
    }

    pub fn as_vec(&self) -> [&BigInt; 6] {
        [&self.x0, &self.x1, &self.x2, &self.y0, &self.y1, &self.y2]
    }

    /// The quadratic-integer coefficients `X_j = x_j + w y_j` of the element
    /// written as `X_0 + X_1 t + X_2 t^2`.
    pub fn relative_coords(&self) -> [QuadInt; 3] {
        [
            QuadInt::new(self.x0.clone(), self.y0.clone()),
            QuadInt::new(self.x1.clone(), self.y1.clone()),
            QuadInt::new(self.x2.clone(), self.y2.clone()),
        ]
    }
}

/// The order itself: the two field specs, the 6x6 multiplication table of
/// the basis (each product expressed in coordinates), and the order
/// discriminant `disc(cubic)^2 * disc_M^3`.
#[derive(Clone, Debug)]
pub struct CompositeOrder {
    cubic: CubicFieldSpec,
    quad: ImagQuadSpec,
    structure: Vec<Vec<ElementCoords>>,
    disc_o: BigInt,
}

/// Outcome of the index computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexResult {
    /// The element does not generate the degree-6 field (its characteristic
    /// polynomial is inseparable), so it cannot generate a power basis.
    NotPrimitive,
    /// The index `sqrt(|disc(char poly) / disc(order)|)`, a positive integer.
    Index(BigInt),
}

pub fn composite_order(cubic: &CubicFieldSpec, quad: &ImagQuadSpec) -> CompositeOrder {
    let mut structure = vec![vec![ElementCoords::from_i64([0; 6]); 6]; 6];
    for i in 0..6 {
        for j in 0..6 {
            structure[i][j] = mul_basis(cubic, quad, i, j);
        }
    }
    let dm = quad.disc_m();
    let disc_o = cubic.disc() * cubic.disc() * dm * dm * dm;
    CompositeOrder {
        cubic: cubic.clone(),
        quad: quad.clone(),
        structure,
        disc_o,
    }
}

/// Product of basis elements `b_i b_j` in coordinates. Basis order:
/// `1, t, t^2, w, w t, w t^2`; index i = 3*s + p encodes `w^s t^p`.
fn mul_basis(cubic: &CubicFieldSpec, quad: &ImagQuadSpec, i: usize, j: usize) -> ElementCoords {
    let (si, pi) = (i / 3, i % 3);
    let (sj, pj) = (j / 3, j % 3);
    // theta-part: t^(pi+pj) reduced mod the minimal polynomial.
    let mut tpow = [QuadInt::zero(), QuadInt::zero(), QuadInt::zero()];
    let mut raw = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
    raw[pi + pj] = BigInt::one();
    reduce_theta(cubic, &mut raw);
    for k in 0..3 {
        tpow[k] = QuadInt::new(raw[k].clone(), BigInt::zero());
    }
    // w-part: w^(si+sj) with w^2 = trace*w - norm.
    let wfactor = match si + sj {
        0 => QuadInt::new(BigInt::one(), BigInt::zero()),
        1 => QuadInt::new(BigInt::zero(), BigInt::one()),
        2 => QuadInt::new(-quad.omega_norm().clone(), quad.omega_trace().clone()),
        _ => unreachable!(),
    };
    let coeffs: Vec<QuadInt> = tpow.iter().map(|c| c.mul(&wfactor, quad)).collect();
    ElementCoords::new(
        coeffs[0].a.clone(),
        coeffs[1].a.clone(),
        coeffs[2].a.clone(),
        coeffs[0].b.clone(),
        coeffs[1].b.clone(),
        coeffs[2].b.clone(),
    )
}

/// Reduces a degree-4 theta expansion in place using
/// `t^3 = -a2 t^2 - a1 t - a0`.
fn reduce_theta(cubic: &CubicFieldSpec, raw: &mut [BigInt; 5]) {
    for k in (3..5).rev() {
        if raw[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut raw[k], BigInt::zero());
        raw[k - 1] -= &c * cubic.a2();
        raw[k - 2] -= &c * cubic.a1();
        raw[k - 3] -= &c * cubic.a0();
    }
}

impl CompositeOrder {
    pub fn cubic(&self) -> &CubicFieldSpec {
        &self.cubic
    }

    pub fn quad(&self) -> &ImagQuadSpec {
        &self.quad
    }

    pub fn disc_o(&self) -> &BigInt {
        &self.disc_o
    }

    pub fn structure_entry(&self, i: usize, j: usize) -> &ElementCoords {
        &self.structure[i][j]
    }

    /// Matrix of multiplication by the element on the order basis
    /// (column j holds the coordinates of `alpha * b_j`).
    pub fn mult_matrix(&self, coords: &ElementCoords) -> IMat {
        let mut m = IMat::zeros(6);
        let cv = coords.as_vec();
        for j in 0..6 {
            for i in 0..6 {
                if cv[i].is_zero() {
                    continue;
                }
                let prod = &self.structure[i][j];
                let pv = prod.as_vec();
                for r in 0..6 {
                    let v = m.get(r, j) + cv[i] * pv[r];
                    m.set(r, j, v);
                }
            }
        }
        m
    }

    /// Monic degree-6 characteristic polynomial of multiplication by the
    /// element.
    pub fn char_poly(&self, coords: &ElementCoords) -> UniPoly {
        self.mult_matrix(coords).char_poly("x")
    }

    /// Index of the element: `sqrt(|disc(char poly)| / |disc(order)|)` when
    /// the characteristic polynomial is separable, `NotPrimitive` otherwise.
    ///
    /// Panics if the quotient fails to be the square of a positive integer;
    /// that would mean the multiplication table itself is wrong.
    pub fn element_index(&self, coords: &ElementCoords) -> IndexResult {
        let chi = self.char_poly(coords);
        let d = poly_discriminant(&chi).expect("characteristic polynomial has degree 6");
        if d.is_zero() {
            return IndexResult::NotPrimitive;
        }
        let (q, r) = d.div_rem(&self.disc_o);
        assert!(
            r.is_zero() && q.is_positive(),
            "disc(char poly) = {d} is not disc(order) * k^2 (order disc {})",
            self.disc_o
        );
        let k = q.sqrt();
        assert_eq!(&k * &k, q, "index quotient {q} is not a perfect square");
        IndexResult::Index(k)
    }

    /// The two norm factors of the index factorization: `N1` is the norm to
    /// Q of the relative norm form at `(X1, X2)`, `N2` the cubic-field norm
    /// of the `w`-part. Together with the form `F` they multiply to the
    /// index (up to sign).
    pub fn index_factors(&self, coords: &ElementCoords) -> (BigInt, BigInt) {
        let [_, x1c, x2c] = coords.relative_coords();
        let s = norm_form_shifted(&self.cubic);
        let n1 = s.eval_quadint(&x1c, &x2c, &self.quad).norm(&self.quad);
        let n2 = norm_l_element(&self.cubic, &coords.y0, &coords.y1, &coords.y2);
        (n1, n2)
    }

    /// Discriminant of the basis computed from the trace form,
    /// `det(Tr(b_i b_j))`; equals `disc_o` and is cross-checked in tests.
    pub fn trace_form_disc(&self) -> BigInt {
        let mut t = IMat::zeros(6);
        for i in 0..6 {
            for j in 0..6 {
                let tr = self.mult_matrix(&self.structure[i][j]).trace();
                t.set(i, j, tr);
            }
        }
        t.determinant()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sec42_order(d: i64) -> CompositeOrder {
        let cubic = CubicFieldSpec::from_i64(-1, -2, 1).unwrap();
        let quad = ImagQuadSpec::from_i64(d).unwrap();
        composite_order(&cubic, &quad)
    }

    #[test]
    fn order_discriminant_value() {
        // 49^2 * (-4)^3 = -153664
        let order = sec42_order(1);
        assert_eq!(order.disc_o(), &BigInt::from(-153664i64));
    }

    #[test]
    fn structure_entries() {
        let order = sec42_order(1);
        // t * t^2 = t^3 = -a2 t^2 - a1 t - a0 = t^2 + 2t - 1
        assert_eq!(
            order.structure_entry(1, 2),
            &ElementCoords::from_i64([-1, 2, 1, 0, 0, 0])
        );
        // w * w = -d = -1 in the Gaussian case
        assert_eq!(
            order.structure_entry(3, 3),
            &ElementCoords::from_i64([-1, 0, 0, 0, 0, 0])
        );
        // products commute
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(order.structure_entry(i, j), order.structure_entry(j, i));
            }
        }
    }

    #[test]
    fn char_poly_of_quadratic_generator() {
        // alpha = w with d = 1: (x^2 + 1)^3
        let order = sec42_order(1);
        let chi = order.char_poly(&ElementCoords::from_i64([0, 0, 0, 1, 0, 0]));
        let x2p1 = UniPoly::from_i64("x", &[1, 0, 1]);
        let expect = &(&x2p1 * &x2p1) * &x2p1;
        assert_eq!(chi, expect);
    }

    #[test]
    fn char_poly_of_cubic_generator() {
        // alpha = t: f(x)^2
        let order = sec42_order(1);
        let chi = order.char_poly(&ElementCoords::from_i64([0, 1, 0, 0, 0, 0]));
        let f = order.cubic().min_poly();
        assert_eq!(chi, &f * &f);
    }

    #[test]
    fn char_poly_of_rational() {
        // alpha = 7: (x - 7)^6
        let order = sec42_order(1);
        let chi = order.char_poly(&ElementCoords::from_i64([7, 0, 0, 0, 0, 0]));
        let lin = UniPoly::from_i64("x", &[-7, 1]);
        let mut expect = lin.clone();
        for _ in 0..5 {
            expect = &expect * &lin;
        }
        assert_eq!(chi, expect);
    }

    #[test]
    fn known_generators_have_index_one() {
        let order = sec42_order(1);
        for v in [[0i64, 0, 0, 0, 1, 0], [0, 0, 0, 2, 0, -1]] {
            assert_eq!(
                order.element_index(&ElementCoords::from_i64(v)),
                IndexResult::Index(BigInt::one()),
                "{v:?}"
            );
        }
    }

    #[test]
    fn non_primitive_elements_detected() {
        let order = sec42_order(1);
        // degree-3 element t, degree-2 element w, rationals
        for v in [
            [0i64, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [5, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0],
        ] {
            assert_eq!(
                order.element_index(&ElementCoords::from_i64(v)),
                IndexResult::NotPrimitive,
                "{v:?}"
            );
        }
    }

    #[test]
    fn index_factor_hand_values() {
        let order = sec42_order(1);
        // (x1,x2,y0,y1,y2) = (0,0,0,1,0): X1 = w, X2 = 0.
        // N1 = N(w^3) = 1, N2 = N(t) = -a0 = -1.
        let (n1, n2) =
            order.index_factors(&ElementCoords::from_i64([0, 0, 0, 0, 1, 0]));
        assert_eq!((n1, n2), (BigInt::one(), BigInt::from(-1)));
        // (0,0,1,-1,0): X1 = -w... x-part zero, y-part (1,-1,0).
        // N1 = N(w)^3-ish evaluated at X1 = -w? No: x1 = 0, y1 = -1 so X1 = -w,
        // X2 = 0, shifted form is monic: N1 = N((-w)^3) = N(w)^3 = 1.
        // N2 = N(1 - t) = f(1) = -1.
        let (n1, n2) =
            order.index_factors(&ElementCoords::from_i64([0, 0, 0, 1, -1, 0]));
        assert_eq!((n1, n2), (BigInt::one(), BigInt::from(-1)));
        // zero element
        let (n1, n2) = order.index_factors(&ElementCoords::from_i64([0; 6]));
        assert_eq!((n1, n2), (BigInt::zero(), BigInt::zero()));
    }

    #[test]
    fn trace_form_discriminant_matches() {
        for d in [1i64, 2, 3, 5, 7] {
            let order = sec42_order(d);
            assert_eq!(order.trace_form_disc(), *order.disc_o(), "d = {d}");
        }
    }

    #[test]
    fn index_invariant_under_translation_and_sign() {
        let order = sec42_order(1);
        let base = ElementCoords::from_i64([0, 0, 0, 2, 0, -1]);
        for shift in [-3i64, 1, 11] {
            let mut v = base.clone();
            v.x0 = BigInt::from(shift);
            assert_eq!(order.element_index(&v), order.element_index(&base));
        }
        let neg = ElementCoords::from_i64([0, 0, 0, -2, 0, 1]);
        assert_eq!(order.element_index(&neg), order.element_index(&base));
    }
}
