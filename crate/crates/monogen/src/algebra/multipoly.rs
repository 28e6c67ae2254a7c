//! Sparse multivariate polynomials over the integers with a declared,
//! ordered variable set and graded-lexicographic term order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector ordered graded-lexicographically: first by total degree,
/// then lexicographically in the declared variable order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial. No zero coefficients are stored, and the
/// term map iterates in ascending graded-lex order, so iteration (and
/// therefore printing and serialization) is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn make_vars(names: &[&str]) -> Arc<[String]> {
        names.iter().map(|s| s.to_string()).collect()
    }

    pub fn zero(vars: Arc<[String]>) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<[String]>, c: BigInt) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; p.vars.len()]), c);
        }
        p
    }

    pub fn var(vars: Arc<[String]>, name: &str) -> Result<Self> {
        let idx = Self::var_index(&vars, name)?;
        let mut expo = vec![0u32; vars.len()];
        expo[idx] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial(expo), BigInt::one());
        Ok(p)
    }

    /// A single term `coeff * prod(var^exp)`.
    pub fn monomial(vars: Arc<[String]>, parts: &[(&str, u32)], coeff: BigInt) -> Result<Self> {
        let mut expo = vec![0u32; vars.len()];
        for (name, e) in parts {
            let idx = Self::var_index(&vars, name)?;
            expo[idx] += e;
        }
        let mut p = Self::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(Monomial(expo), coeff);
        }
        Ok(p)
    }

    fn var_index(vars: &[String], name: &str) -> Result<usize> {
        vars.iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, name: &str) -> Result<u32> {
        let idx = Self::var_index(&self.vars, name)?;
        Ok(self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0))
    }

    /// True if the variable occurs in no stored term.
    pub fn is_free_of(&self, name: &str) -> Result<bool> {
        Ok(self.degree_in(name)? == 0)
    }

    /// Ascending graded-lex iteration over (monomial, coefficient).
    pub fn iter_terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    fn insert_add(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &MultiPoly) {
        assert_eq!(
            self.vars, other.vars,
            "multivariate arithmetic across different variable sets"
        );
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Evaluation with one integer per declared variable.
    pub fn eval(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.vars.len(), "wrong number of values");
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (idx, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &values[idx];
                }
            }
            acc += t;
        }
        acc
    }

    /// Replaces `name` by `replacement` (same variable set), exactly.
    pub fn substitute(&self, name: &str, replacement: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(replacement);
        let idx = Self::var_index(&self.vars, name)?;
        let max_exp = self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0);
        // power cache: replacement^0 .. replacement^max_exp
        let mut powers = Vec::with_capacity(max_exp as usize + 1);
        powers.push(Self::constant(self.vars.clone(), BigInt::one()));
        for e in 1..=max_exp {
            let next = &powers[(e - 1) as usize] * replacement;
            powers.push(next);
        }
        let mut out = Self::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[idx];
            let mut stripped = m.clone();
            stripped.0[idx] = 0;
            if e == 0 {
                out.insert_add(stripped, c.clone());
                continue;
            }
            for (pm, pc) in &powers[e as usize].terms {
                let mut combined = stripped.clone();
                for (k, &pe) in pm.0.iter().enumerate() {
                    combined.0[k] += pe;
                }
                out.insert_add(combined, c * pc);
            }
        }
        Ok(out)
    }

    /// Appends fresh variables (exponent zero everywhere).
    pub fn extend_vars(&self, extra: &[&str]) -> MultiPoly {
        let mut names: Vec<String> = self.vars.to_vec();
        for n in extra {
            assert!(
                !names.iter().any(|v| v == n),
                "variable `{n}` already declared"
            );
            names.push(n.to_string());
        }
        let vars: Arc<[String]> = names.into();
        let pad = extra.len();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.extend(std::iter::repeat(0).take(pad));
                (Monomial(e), c.clone())
            })
            .collect();
        MultiPoly { vars, terms }
    }

    /// Drops variables that no longer occur. Errors if any still does.
    pub fn remove_vars(&self, drop: &[&str]) -> Result<MultiPoly> {
        let mut drop_idx = Vec::new();
        for name in drop {
            let idx = Self::var_index(&self.vars, name)?;
            if !self.is_free_of(name)? {
                return Err(Error::Unsupported(format!(
                    "variable `{name}` still occurs; cannot drop it"
                )));
            }
            drop_idx.push(idx);
        }
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|i| !drop_idx.contains(i))
            .collect();
        let vars: Arc<[String]> = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                (
                    Monomial(keep.iter().map(|&i| m.0[i]).collect()),
                    c.clone(),
                )
            })
            .collect();
        Ok(MultiPoly { vars, terms })
    }

    /// Applies a permutation of the declared variables: exponent at position
    /// `i` moves to position `perm[i]`. Variable names stay in place, so this
    /// realizes the substitution `v_i -> v_perm(i)`.
    pub fn permute_vars(&self, perm: &[usize]) -> MultiPoly {
        assert_eq!(perm.len(), self.vars.len());
        let mut out = Self::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; m.0.len()];
            for (i, &exp) in m.0.iter().enumerate() {
                e[perm[i]] += exp;
            }
            out.insert_add(Monomial(e), c.clone());
        }
        out
    }

    /// Collects the polynomial as coefficients of powers of `name`; entry `k`
    /// is the coefficient of `name^k`, a polynomial free of `name`.
    pub fn coefficients_in(&self, name: &str) -> Result<Vec<MultiPoly>> {
        let idx = Self::var_index(&self.vars, name)?;
        let max_exp = self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0);
        let mut out = vec![Self::zero(self.vars.clone()); max_exp as usize + 1];
        for (m, c) in &self.terms {
            let e = m.0[idx];
            let mut stripped = m.clone();
            stripped.0[idx] = 0;
            out[e as usize].insert_add(stripped, c.clone());
        }
        Ok(out)
    }

    /// Canonical text: one term per line, `coeff monomial`, leading term
    /// first (descending graded-lex).
    pub fn canonical_text(&self) -> String {
        if self.is_zero() {
            return "0 1\n".to_string();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            out.push_str(&c.to_string());
            out.push(' ');
            out.push_str(&self.monomial_text(m));
            out.push('\n');
        }
        out
    }

    fn monomial_text(&self, m: &Monomial) -> String {
        if m.is_constant() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars[i].clone()),
                _ => parts.push(format!("{}^{}", self.vars[i], e)),
            }
        }
        parts.join("*")
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_vars(rhs);
        let mut out = MultiPoly::zero(self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let e: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.insert_add(Monomial(e), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
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
            if m.is_constant() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", self.monomial_text(m))?;
            } else {
                write!(f, "{}*{}", mag, self.monomial_text(m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars3() -> Arc<[String]> {
        MultiPoly::make_vars(&["x", "y", "z"])
    }

    #[test]
    fn grlex_order() {
        // total degree first, then lex in declared order
        let a = Monomial(vec![2, 0, 0]); // x^2
        let b = Monomial(vec![0, 1, 0]); // y
        let c = Monomial(vec![1, 1, 0]); // xy
        assert!(b < a);
        assert!(c < a, "x^2 beats xy in the lex tiebreak");
        assert!(Monomial(vec![0, 0, 3]) < Monomial(vec![1, 0, 2]));
    }

    #[test]
    fn arithmetic_and_eval() {
        let v = vars3();
        let x = MultiPoly::var(v.clone(), "x").unwrap();
        let y = MultiPoly::var(v.clone(), "y").unwrap();
        let p = &(&x + &y) * &(&x - &y); // x^2 - y^2
        assert_eq!(p.num_terms(), 2);
        let val = p.eval(&[BigInt::from(5), BigInt::from(3), BigInt::from(99)]);
        assert_eq!(val, BigInt::from(16));
    }

    #[test]
    fn substitute_variable_by_poly() {
        let v = vars3();
        let x = MultiPoly::var(v.clone(), "x").unwrap();
        let y = MultiPoly::var(v.clone(), "y").unwrap();
        let z = MultiPoly::var(v.clone(), "z").unwrap();
        // p = x^2 + z, substitute x -> y + 1
        let p = &(&x * &x) + &z;
        let repl = &y + &MultiPoly::constant(v.clone(), BigInt::one());
        let q = p.substitute("x", &repl).unwrap();
        for (yy, zz) in [(2i64, 3i64), (-4, 7), (0, 0)] {
            let got = q.eval(&[BigInt::zero(), BigInt::from(yy), BigInt::from(zz)]);
            assert_eq!(got, BigInt::from((yy + 1) * (yy + 1) + zz));
        }
        assert!(q.is_free_of("x").unwrap());
    }

    #[test]
    fn canonical_text_descends() {
        let v = vars3();
        let x = MultiPoly::var(v.clone(), "x").unwrap();
        let y = MultiPoly::var(v.clone(), "y").unwrap();
        let p = &(&(&x * &x) - &y) + &MultiPoly::constant(v, BigInt::from(-7));
        assert_eq!(p.canonical_text(), "1 x^2\n-1 y\n-7 1\n");
    }

    #[test]
    fn permute_vars_swaps_roles() {
        let v = vars3();
        let x = MultiPoly::var(v.clone(), "x").unwrap();
        // x -> y under the transposition (0 1)
        let p = x.permute_vars(&[1, 0, 2]);
        assert_eq!(p, MultiPoly::var(v, "y").unwrap());
    }
}
