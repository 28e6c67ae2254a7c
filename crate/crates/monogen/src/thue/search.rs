//! Bounded search for `|form(x, y)| <= m` over `max(|x|, |y|) <= bound`.
//!
//! For forms whose dehomogenization has three real roots (every norm form of
//! a totally real cubic does), a solution with y fixed must have x within
//! cube-root-of-m of one of the lines `x = root * y`; the roots are isolated
//! once by exact bisection on a fixed 2^20-denominator grid and each row
//! beyond a small exhaustive belt only tests a short window around each
//! line. The window width accounts for the cube-root radius, the grid error
//! accumulated over y, and rounding, so no solution inside the box escapes.
//! One-real-root forms (and any degenerate sign pattern near a critical
//! point) fall back to exact per-row scans, which need no root data at all.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{Signed, Zero};

use super::{SearchCompleteness, ThueSolutionSet};
use crate::algebra::roots::cubic_band_solutions;
use crate::error::{Error, Result};
use crate::numberfields::BinaryCubicForm;

/// Scaled-integer denominator for root isolation.
const ROOT_DENOM_BITS: u32 = 20;
/// Rows with |y| up to this are always scanned exactly.
const EXHAUSTIVE_BELT: u64 = 64;

pub fn solve_thue_range(
    form: &BinaryCubicForm,
    max_abs_rhs: u64,
    bound: u64,
) -> Result<ThueSolutionSet> {
    if form.c3.is_zero() {
        return Err(Error::DegenerateForm(
            "leading coefficient is zero (not a cubic in x)".into(),
        ));
    }
    if form.disc().is_zero() {
        return Err(Error::DegenerateForm("discriminant is zero".into()));
    }
    assert!(bound >= 1, "search bound must be at least 1");

    // Root-finding works on a positive leading coefficient; solutions and
    // |values| are unchanged under negating the form.
    let pos = if form.c3.is_negative() {
        BinaryCubicForm::new(-&form.c3, -&form.c2, -&form.c1, -&form.c0)
    } else {
        form.clone()
    };

    let m_big = BigInt::from(max_abs_rhs);
    let xmax = BigInt::from(bound);
    let mut found: BTreeSet<(BigInt, BigInt)> = BTreeSet::new();

    // y = 0 row: |c3 x^3| <= m.
    {
        let r = (m_big.clone() / &pos.c3).cbrt();
        let mut x = -r.clone();
        while x <= r {
            if x.abs() <= xmax && pos.eval(&x, &BigInt::zero()).abs() <= m_big {
                found.insert((x.clone(), BigInt::zero()));
            }
            x += 1u8;
        }
    }

    let roots = if pos.disc().is_positive() {
        isolate_three_real_roots(&pos)
    } else {
        None
    };

    let belt = match roots {
        Some(_) => EXHAUSTIVE_BELT.min(bound),
        None => bound,
    };

    // Exhaustive belt: exact monotone-piece scan of each row.
    for ya in 1..=belt {
        for y in [BigInt::from(ya), BigInt::from(-(ya as i64))] {
            scan_row(&pos, &y, &m_big, &xmax, &mut found);
        }
    }

    // Beyond the belt: windows around each root line.
    if let Some(scaled_roots) = roots {
        let denom = BigInt::from(1u64 << ROOT_DENOM_BITS);
        let cbrt_m = BigInt::from(max_abs_rhs.cbrt());
        for ya in belt + 1..=bound {
            for y in [BigInt::from(ya), BigInt::from(-(ya as i64))] {
                let width = &cbrt_m + (y.abs() >> ROOT_DENOM_BITS) + 3u8;
                for p in &scaled_roots {
                    let center = round_div(&(p * &y), &denom);
                    let mut x = &center - &width;
                    let hi = &center + &width;
                    while x <= hi {
                        if x.abs() <= xmax && pos.eval(&x, &y).abs() <= m_big {
                            found.insert((x.clone(), y.clone()));
                        }
                        x += 1u8;
                    }
                }
            }
        }
    }

    let solutions: Vec<(BigInt, BigInt, BigInt)> = found
        .into_iter()
        .map(|(x, y)| {
            let v = form.eval(&x, &y);
            (x, y, v)
        })
        .collect();
    Ok(ThueSolutionSet {
        form: form.clone(),
        max_abs_rhs,
        solutions,
        completeness: SearchCompleteness::BoundedSearch(bound),
    })
}

/// Exact solutions of `|P_y(x)| <= m` for one row, via monotone pieces.
fn scan_row(
    form: &BinaryCubicForm,
    y: &BigInt,
    m: &BigInt,
    xmax: &BigInt,
    found: &mut BTreeSet<(BigInt, BigInt)>,
) {
    let c2 = &form.c2 * y;
    let c1 = &form.c1 * y * y;
    let c0 = &form.c0 * y * y * y;
    for x in cubic_band_solutions(&form.c3, &c2, &c1, &c0, m, xmax) {
        found.insert((x, y.clone()));
    }
}

/// Rounds `n / d` (d > 0) half away from zero, symmetrically in n.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    if BigInt::from(2) * r.abs() >= *d {
        if n.is_negative() {
            q - 1u8
        } else {
            q + 1u8
        }
    } else {
        q
    }
}

/// Isolates the three real roots of `form(x, 1)` (positive discriminant,
/// positive leading coefficient) as scaled integers `p` with
/// `root in [p, p+1] / 2^20`. Returns None if the sign pattern around the
/// critical points is too tight to separate, in which case the caller scans
/// every row exactly instead.
fn isolate_three_real_roots(form: &BinaryCubicForm) -> Option<Vec<BigInt>> {
    let denom = BigInt::from(1u64 << ROOT_DENOM_BITS);
    let scaled_sign = |p: &BigInt| -> i8 {
        let v = ((&form.c3 * p + &form.c2 * &denom) * p + &form.c1 * &denom * &denom) * p
            + &form.c0 * &denom * &denom * &denom;
        match v.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    };

    // Cauchy bound on |roots|.
    let maxc = form
        .c2
        .abs()
        .max(form.c1.abs())
        .max(form.c0.abs());
    let x_bound = (maxc + &form.c3 - 1u8).div_floor(&form.c3) + 1u8;
    let lo = -&x_bound * &denom;
    let hi = &x_bound * &denom;

    // Critical points of the dehomogenization: roots of 3 c3 x^2 + 2 c2 x + c1,
    // bracketed directly at grid precision via sqrt(disc * denom^2).
    let disc_q = BigInt::from(4) * &form.c2 * &form.c2 - BigInt::from(12) * &form.c3 * &form.c1;
    if !disc_q.is_positive() {
        return None;
    }
    let s = (&disc_q * &denom * &denom).sqrt();
    let six_c3 = BigInt::from(6) * &form.c3;
    let crit = |num_lo: BigInt, num_hi: BigInt| -> (BigInt, BigInt) {
        (
            num_lo.div_floor(&six_c3),
            num_hi.div_floor(&six_c3) + 1u8,
        )
    };
    let two_c2_d = BigInt::from(2) * &form.c2 * &denom;
    let (lmax_lo, lmax_hi) = crit(-&two_c2_d - &s - 1u8, -&two_c2_d - &s);
    let (lmin_lo, lmin_hi) = crit(-&two_c2_d + &s, -&two_c2_d + &s + 1u8);

    // With c3 > 0 the local max comes first: find a grid point with positive
    // sign near it and one with negative sign near the local min. The
    // brackets are at most a couple of grid units wide, so a handful of
    // probes suffices; failure (or separators out of order) means the roots
    // are closer than the grid resolves and the caller falls back.
    let sep_plus = probe_sign(&scaled_sign, &lmax_lo, &lmax_hi, 1)?;
    let sep_minus = probe_sign(&scaled_sign, &lmin_lo, &lmin_hi, -1)?;
    if sep_plus >= sep_minus {
        return None;
    }

    let r1 = bisect_root(&scaled_sign, lo.clone(), sep_plus.clone())?;
    let r2 = bisect_root(&scaled_sign, sep_plus, sep_minus.clone())?;
    let r3 = bisect_root(&scaled_sign, sep_minus, hi)?;
    Some(vec![r1, r2, r3])
}

/// Searches the scaled interval (widened a little) for a point with the
/// requested sign.
fn probe_sign(
    sign: &impl Fn(&BigInt) -> i8,
    lo: &BigInt,
    hi: &BigInt,
    want: i8,
) -> Option<BigInt> {
    let mut p = lo - 2u8;
    let end = hi + 2u8;
    while p <= end {
        if sign(&p) == want {
            return Some(p);
        }
        p += 1u8;
    }
    None
}

/// Exact bisection on the scaled grid: endpoints must have opposite signs
/// (or a zero, which is returned directly). Returns p with the root in
/// `[p, p+1]` grid units.
fn bisect_root(sign: &impl Fn(&BigInt) -> i8, mut lo: BigInt, mut hi: BigInt) -> Option<BigInt> {
    let (slo, shi) = (sign(&lo), sign(&hi));
    if slo == 0 {
        return Some(lo);
    }
    if shi == 0 {
        return Some(hi);
    }
    if slo == shi {
        return None;
    }
    while &hi - &lo > BigInt::from(1) {
        let mid = (&hi + &lo).div_floor(&BigInt::from(2));
        let sm = sign(&mid);
        if sm == 0 {
            return Some(mid);
        }
        if sm == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(lo)
}
