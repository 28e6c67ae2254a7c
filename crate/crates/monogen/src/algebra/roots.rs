//! Exact integer root extraction.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// All integer roots of a nonzero polynomial.
///
/// Zero roots are stripped first. For degree <= 3 the remaining roots are
/// located exactly by splitting the polynomial into monotone ranges at its
/// critical points and binary-searching each range, which needs no
/// factorization at all. Higher degrees fall back to divisor enumeration of
/// the trailing coefficient (trial division up to 10^6; candidates above any
/// unfactored part are still caught as long as every prime factor of the
/// root is below the trial bound), with each candidate verified by
/// evaluation.
pub fn integer_roots(p: &UniPoly) -> Result<BTreeSet<BigInt>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("integer root set"));
    }
    let mut roots = BTreeSet::new();

    // Strip x^k.
    let mut coeffs = p.coeffs().to_vec();
    let zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.insert(BigInt::zero());
        coeffs.drain(..zeros);
    }
    let q = UniPoly::new(p.var_name(), coeffs);
    let deg = q.degree().unwrap();
    if deg == 0 {
        return Ok(roots);
    }

    if deg <= 3 {
        for r in cubic_band_solutions(&q.coeff(3), &q.coeff(2), &q.coeff(1), &q.coeff(0), &BigInt::zero(), &root_bound(&q))
        {
            roots.insert(r);
        }
    } else {
        let bound = root_bound(&q);
        for d in divisors_up_to(&q.coeff(0).abs(), &bound) {
            for cand in [d.clone(), -d] {
                if q.eval(&cand).is_zero() {
                    roots.insert(cand);
                }
            }
        }
    }

    debug_assert!(roots.iter().all(|r| p.eval(r).is_zero()));
    Ok(roots)
}

/// Cauchy bound: every real root has |x| <= 1 + max |c_i| / |lc|.
fn root_bound(p: &UniPoly) -> BigInt {
    let lc = p.leading().unwrap().abs();
    let max = p
        .coeffs()
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(BigInt::zero);
    (max + &lc - BigInt::one()).div_floor(&lc) + BigInt::one()
}

/// All integers x in [-xmax, xmax] with |c3 x^3 + c2 x^2 + c1 x + c0| <= band,
/// for a polynomial of degree <= 3 (c3 may be zero). Exact: the range is
/// split into monotone pieces at the critical points and each piece is
/// binary-searched for the band crossing.
pub(crate) fn cubic_band_solutions(
    c3: &BigInt,
    c2: &BigInt,
    c1: &BigInt,
    c0: &BigInt,
    band: &BigInt,
    xmax: &BigInt,
) -> Vec<BigInt> {
    let eval = |x: &BigInt| -> BigInt { ((c3 * x + c2) * x + c1) * x + c0 };
    let mut out = Vec::new();
    let lo = -xmax.clone();
    let hi = xmax.clone();

    // Orient so the cubic coefficient (or the relevant leading behavior) is
    // handled uniformly: collect monotone ranges as (start, end, increasing).
    let mut ranges: Vec<(BigInt, BigInt)> = Vec::new();
    let mut gaps: Vec<BigInt> = Vec::new();

    if c3.is_zero() {
        if c2.is_zero() {
            // Linear or constant: monotone (or flat) everywhere.
            ranges.push((lo.clone(), hi.clone()));
        } else {
            // Parabola: vertex at -c1/(2 c2).
            let v_lo = (-c1).div_floor(&(BigInt::from(2) * c2));
            split_at(&mut ranges, &mut gaps, &lo, &hi, &[(v_lo.clone(), v_lo + 1)]);
        }
    } else {
        // Critical points: roots of 3 c3 x^2 + 2 c2 x + c1.
        let disc = BigInt::from(4) * c2 * c2 - BigInt::from(12) * c3 * c1;
        if disc.is_positive() {
            let s = disc.sqrt();
            let six_c3 = BigInt::from(6) * c3;
            // sqrt(disc) lies in [s, s+1); bracket both critical points with
            // integer endpoints regardless of the sign of c3.
            let cands = [
                (-BigInt::from(2) * c2 - &s - 1, -BigInt::from(2) * c2 - &s),
                (-BigInt::from(2) * c2 + &s, -BigInt::from(2) * c2 + &s + 1),
            ];
            let mut brackets: Vec<(BigInt, BigInt)> = cands
                .iter()
                .map(|(a, b)| {
                    let (fa, fb) = (a.div_floor(&six_c3), b.div_floor(&six_c3));
                    (fa.clone().min(fb.clone()), fa.max(fb) + 1)
                })
                .collect();
            brackets.sort();
            split_at(&mut ranges, &mut gaps, &lo, &hi, &brackets);
        } else {
            // No interior extrema: globally monotone.
            ranges.push((lo.clone(), hi.clone()));
        }
    }

    for x in &gaps {
        if x >= &lo && x <= &hi && eval(x).abs() <= *band {
            out.push(x.clone());
        }
    }

    for (a, b) in ranges {
        if a > b {
            continue;
        }
        scan_monotone(&eval, &a, &b, band, &mut out);
    }

    out.sort();
    out.dedup();
    out
}

/// Splits [lo, hi] into monotone ranges separated by the critical-point
/// brackets; integers inside the brackets go to `gaps` for direct testing.
fn split_at(
    ranges: &mut Vec<(BigInt, BigInt)>,
    gaps: &mut Vec<BigInt>,
    lo: &BigInt,
    hi: &BigInt,
    brackets: &[(BigInt, BigInt)],
) {
    let mut start = lo.clone();
    for (a, b) in brackets {
        // Monotone up to just below the bracket.
        ranges.push((start.clone(), (a - 1u8).min(hi.clone())));
        let mut x = a.clone();
        while x <= *b {
            gaps.push(x.clone());
            x += 1u8;
        }
        start = b + 1u8;
    }
    ranges.push((start, hi.clone()));
    ranges.retain(|(a, b)| a <= b);
    for r in ranges.iter_mut() {
        if r.0 < *lo {
            r.0 = lo.clone();
        }
        if r.1 > *hi {
            r.1 = hi.clone();
        }
    }
    ranges.retain(|(a, b)| a <= b);
}

/// Collects integer band solutions on a range where the polynomial is
/// monotone. A strictly monotone integer polynomial changes by at least 1
/// per step, so the solution stretch has at most 2*band + 1 points.
fn scan_monotone(
    eval: &impl Fn(&BigInt) -> BigInt,
    a: &BigInt,
    b: &BigInt,
    band: &BigInt,
    out: &mut Vec<BigInt>,
) {
    let fa = eval(a);
    let fb = eval(b);
    let increasing = fb >= fa;
    let (neg_band, pos_band) = (-band.clone(), band.clone());

    // First x with f(x) >= -band (increasing) / f(x) <= band (decreasing).
    let lower_ok = |x: &BigInt| {
        let v = eval(x);
        if increasing {
            v >= neg_band
        } else {
            v <= pos_band
        }
    };
    // Last x with f(x) <= band (increasing) / f(x) >= -band (decreasing).
    let upper_ok = |x: &BigInt| {
        let v = eval(x);
        if increasing {
            v <= pos_band
        } else {
            v >= neg_band
        }
    };

    // Binary search the first point where lower_ok holds.
    let first = {
        if lower_ok(a) {
            a.clone()
        } else if !lower_ok(b) {
            return;
        } else {
            let (mut bad, mut good) = (a.clone(), b.clone());
            while &good - &bad > BigInt::one() {
                let mid = (&good + &bad).div_floor(&BigInt::from(2));
                if lower_ok(&mid) {
                    good = mid;
                } else {
                    bad = mid;
                }
            }
            good
        }
    };
    // Binary search the last point where upper_ok holds.
    let last = {
        if upper_ok(b) {
            b.clone()
        } else if !upper_ok(a) {
            return;
        } else {
            let (mut good, mut bad) = (a.clone(), b.clone());
            while &bad - &good > BigInt::one() {
                let mid = (&good + &bad).div_floor(&BigInt::from(2));
                if upper_ok(&mid) {
                    good = mid;
                } else {
                    bad = mid;
                }
            }
            good
        }
    };

    let mut x = first;
    while x <= last {
        if eval(&x).abs() <= *band {
            out.push(x.clone());
        }
        x += 1u8;
    }
}

/// All positive divisors of |n| that are at most `cap`, by trial division up
/// to 10^6. If an unfactored cofactor remains it is included as a divisor
/// candidate itself (alone and combined), which keeps every divisor whose
/// prime factors are all below the trial bound.
fn divisors_up_to(n: &BigInt, cap: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![];
    }
    let mut m = n.clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    let trial_cap = BigInt::from(1_000_000u32);
    while &p * &p <= m && p <= trial_cap {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1u8 } else { 2u8 };
    }
    if !m.is_one() {
        factors.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc = &acc * &p;
                if acc <= *cap {
                    next.push(acc.clone());
                } else {
                    break;
                }
            }
        }
        next.sort();
        next.dedup();
        divs = next;
    }
    divs
}
