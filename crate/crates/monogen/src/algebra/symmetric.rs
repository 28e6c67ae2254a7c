//! Rewriting polynomials that are symmetric in a block of variables as
//! polynomials in the elementary symmetric functions of that block, with all
//! other variables carried along as passengers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::multipoly::{Monomial, MultiPoly};
use crate::error::{Error, Result};

/// Expresses `p`, symmetric in `sym_vars`, as a polynomial in the elementary
/// symmetric functions `e_vars` (fresh variables, `e_vars[t]` of degree t+1).
///
/// The classical reduction: repeatedly take the lexicographically leading
/// exponent pattern of the symmetric block, subtract the matching product of
/// elementary symmetric polynomials, and record that product in the `e`
/// variables. The leading pattern strictly decreases, so the loop terminates.
/// Symmetry is checked up front against a generating set of permutations; a
/// failing transposition is reported in the error.
///
/// Terms are bucketed by their symmetric-block exponent pattern so each
/// reduction step touches only the patterns it rewrites.
pub fn symmetric_reduce(p: &MultiPoly, sym_vars: &[&str], e_vars: &[&str]) -> Result<MultiPoly> {
    let k = sym_vars.len();
    assert_eq!(k, e_vars.len(), "need one elementary variable per symmetric variable");
    assert!(k >= 2, "symmetric reduction needs at least two variables");

    let sym_idx: Vec<usize> = sym_vars
        .iter()
        .map(|name| {
            p.vars()
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))
        })
        .collect::<Result<_>>()?;

    check_symmetry(p, &sym_idx, sym_vars)?;

    let work = p.extend_vars(e_vars);
    let vars = work.vars().to_vec();
    let e_off = p.vars().len();
    let nvars = vars.len();

    // Bucket terms by the exponent pattern of the symmetric block; the
    // bucket value is the passenger part (symmetric-block exponents zeroed).
    let mut buckets: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
    let vars_arc: std::sync::Arc<[String]> = vars.clone().into();
    for (m, c) in work.iter_terms() {
        let pattern: Vec<u32> = sym_idx.iter().map(|&i| m.0[i]).collect();
        let mut stripped = m.clone();
        for &i in &sym_idx {
            stripped.0[i] = 0;
        }
        let entry = buckets
            .entry(pattern)
            .or_insert_with(|| MultiPoly::zero(vars_arc.clone()));
        *entry = &*entry + &term(&vars, stripped, c.clone());
    }

    let mut expansions: BTreeMap<Vec<u32>, Vec<(Vec<u32>, BigInt)>> = BTreeMap::new();

    loop {
        let Some(lambda) = buckets
            .iter()
            .rev()
            .find(|(pat, poly)| pat.iter().any(|&e| e > 0) && !poly.is_zero())
            .map(|(pat, _)| pat.clone())
        else {
            break;
        };
        // For symmetric input the leading pattern is weakly decreasing.
        debug_assert!(
            lambda.windows(2).all(|w| w[0] >= w[1]),
            "leading pattern {lambda:?} not sorted; symmetry check should have caught this"
        );
        let coeff = buckets.remove(&lambda).unwrap();

        // e-monomial recording prod_t e_t^(lambda_t - lambda_{t+1}) ...
        let mut e_mono = Monomial(vec![0u32; nvars]);
        for t in 0..k {
            let next = if t + 1 < k { lambda[t + 1] } else { 0 };
            e_mono.0[e_off + t] = lambda[t]
                .checked_sub(next)
                .expect("leading pattern must be weakly decreasing");
        }
        // ... and its expansion over the symmetric block, cached by shape.
        let expansion = expansions
            .entry(lambda.clone())
            .or_insert_with(|| expand_e_product(&lambda, k))
            .clone();

        for (pattern, c) in expansion {
            if pattern == lambda {
                continue; // leading term: cancelled by removing the bucket
            }
            debug_assert!(pattern < lambda, "expansion must be lex-smaller than its lead");
            let contribution = coeff.scale(&-c);
            let entry = buckets
                .entry(pattern)
                .or_insert_with(|| MultiPoly::zero(vars_arc.clone()));
            *entry = &*entry + &contribution;
        }

        let zero_pattern = vec![0u32; k];
        let recorded = &coeff * &term(&vars, e_mono, BigInt::one());
        let entry = buckets
            .entry(zero_pattern)
            .or_insert_with(|| MultiPoly::zero(vars_arc.clone()));
        *entry = &*entry + &recorded;
    }

    let result = buckets
        .remove(&vec![0u32; k])
        .unwrap_or_else(|| MultiPoly::zero(vars_arc.clone()));
    debug_assert!(buckets.values().all(MultiPoly::is_zero));
    result.remove_vars(sym_vars)
}

fn term(vars: &[String], m: Monomial, c: BigInt) -> MultiPoly {
    let parts: Vec<(&str, u32)> = m
        .0
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| (vars[i].as_str(), e))
        .collect();
    MultiPoly::monomial(vars.to_vec().into(), &parts, c).expect("term over own variables")
}

/// Expands `prod_t e_t^(lambda_t - lambda_{t+1})` over k abstract symmetric
/// variables and returns its terms as (exponent pattern, coefficient).
fn expand_e_product(lambda: &[u32], k: usize) -> Vec<(Vec<u32>, BigInt)> {
    // Work in a small scratch polynomial over just the symmetric block.
    let names: Vec<String> = (0..k).map(|i| format!("v{i}")).collect();
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let vars = MultiPoly::make_vars(&name_refs);
    let mut acc = MultiPoly::constant(vars.clone(), BigInt::one());
    for t in 0..k {
        let next = if t + 1 < k { lambda[t + 1] } else { 0 };
        let exp = lambda[t]
            .checked_sub(next)
            .expect("leading pattern must be weakly decreasing");
        if exp == 0 {
            continue;
        }
        let e_t = elementary_symmetric(&vars, k, t + 1);
        for _ in 0..exp {
            acc = &acc * &e_t;
        }
    }
    acc.iter_terms()
        .map(|(m, c)| (m.0.clone(), c.clone()))
        .collect()
}

fn elementary_symmetric(
    vars: &std::sync::Arc<[String]>,
    k: usize,
    deg: usize,
) -> MultiPoly {
    let mut acc = MultiPoly::zero(vars.clone());
    let mut idx: Vec<usize> = (0..deg).collect();
    loop {
        let parts: Vec<(&str, u32)> = idx.iter().map(|&i| (vars[i].as_str(), 1u32)).collect();
        acc = &acc + &MultiPoly::monomial(vars.clone(), &parts, BigInt::one()).unwrap();
        let mut t = deg;
        loop {
            if t == 0 {
                return acc;
            }
            t -= 1;
            if idx[t] + 1 <= k - (deg - t) {
                idx[t] += 1;
                for u in t + 1..deg {
                    idx[u] = idx[u - 1] + 1;
                }
                break;
            }
        }
    }
}

fn check_symmetry(p: &MultiPoly, sym_idx: &[usize], sym_vars: &[&str]) -> Result<()> {
    let n = p.vars().len();
    let k = sym_idx.len();
    // Generators of S_k: the transposition (0 1) and the k-cycle.
    let mut transposition: Vec<usize> = (0..n).collect();
    transposition[sym_idx[0]] = sym_idx[1];
    transposition[sym_idx[1]] = sym_idx[0];
    if p.permute_vars(&transposition) != *p {
        return Err(Error::NotSymmetric(
            sym_vars[0].to_string(),
            sym_vars[1].to_string(),
        ));
    }
    if k > 2 {
        let mut cycle: Vec<usize> = (0..n).collect();
        for t in 0..k {
            cycle[sym_idx[t]] = sym_idx[(t + 1) % k];
        }
        if p.permute_vars(&cycle) != *p {
            return Err(Error::NotSymmetric(
                sym_vars[0].to_string(),
                sym_vars[k - 1].to_string(),
            ));
        }
    }
    Ok(())
}
