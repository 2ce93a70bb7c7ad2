use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use crate::symfun::{rat, Rational, SymFun};

/// A Laurent polynomial in `z_1, …, z_k` with coefficients in Λ.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiLaurent {
    vars: usize,
    terms: BTreeMap<Vec<i64>, SymFun>,
}

impl MultiLaurent {
    pub fn zero(vars: usize) -> Self {
        Self { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        Self::monomial(vec![0; vars], SymFun::one())
    }

    pub fn monomial(exps: Vec<i64>, coeff: SymFun) -> Self {
        let mut m = Self::zero(exps.len());
        m.add_term(exps, coeff);
        m
    }

    /// `z_i` (0-based).
    pub fn variable(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        Self::monomial(e, SymFun::one())
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn add_term(&mut self, exps: Vec<i64>, coeff: SymFun) {
        assert_eq!(exps.len(), self.vars, "exponent vector of the wrong length");
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_default();
        *slot = &*slot + &coeff;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn coeff(&self, exps: &[i64]) -> SymFun {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &SymFun)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> SymFun {
        self.coeff(&vec![0; self.vars])
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, f) in &self.terms {
            out.add_term(e.clone(), f.scale(c));
        }
        out
    }

    /// Multiplication by `z^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, f) in &self.terms {
            out.add_term(e.iter().zip(shift).map(|(a, b)| a + b).collect(), f.clone());
        }
        out
    }

    /// `z_i ↦ z_i^{-1}`.
    pub fn invert(&self) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, f) in &self.terms {
            out.add_term(e.iter().map(|a| -a).collect(), f.clone());
        }
        out
    }

    /// Drops terms whose total `|exponent|` exceeds `order`.
    pub fn truncate(&self, order: i64) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, f) in &self.terms {
            if e.iter().map(|a| a.abs()).sum::<i64>() <= order {
                out.add_term(e.clone(), f.clone());
            }
        }
        out
    }

    /// The constant term of `self · other` without forming the product.
    pub fn constant_term_of_product(&self, other: &MultiLaurent) -> SymFun {
        let mut acc = SymFun::zero();
        for (e, f) in &self.terms {
            let neg: Vec<i64> = e.iter().map(|a| -a).collect();
            if let Some(g) = other.terms.get(&neg) {
                acc = &acc + &(f * g);
            }
        }
        acc
    }

    /// Embeds into more variables, placing variable `i` at position `map[i]`.
    pub fn embed(&self, vars: usize, map: &[usize]) -> Self {
        let mut out = Self::zero(vars);
        for (e, f) in &self.terms {
            let mut ne = vec![0; vars];
            for (i, &a) in e.iter().enumerate() {
                ne[map[i]] = a;
            }
            out.add_term(ne, f.clone());
        }
        out
    }
}

impl Add for &MultiLaurent {
    type Output = MultiLaurent;
    fn add(self, rhs: &MultiLaurent) -> MultiLaurent {
        let mut out = self.clone();
        for (e, f) in &rhs.terms {
            out.add_term(e.clone(), f.clone());
        }
        out
    }
}

impl Sub for &MultiLaurent {
    type Output = MultiLaurent;
    fn sub(self, rhs: &MultiLaurent) -> MultiLaurent {
        let mut out = self.clone();
        for (e, f) in &rhs.terms {
            out.add_term(e.clone(), -f);
        }
        out
    }
}

impl Mul for &MultiLaurent {
    type Output = MultiLaurent;
    fn mul(self, rhs: &MultiLaurent) -> MultiLaurent {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let mut out = MultiLaurent::zero(self.vars);
        for (e1, f1) in &self.terms {
            for (e2, f2) in &rhs.terms {
                out.add_term(e1.iter().zip(e2).map(|(a, b)| a + b).collect(), f1 * f2);
            }
        }
        out
    }
}

/// `a_δ(z) = ∏_{i<j} (z_i − z_j)` by multiplying out the product.
pub fn vandermonde_product(k: usize) -> MultiLaurent {
    let mut acc = MultiLaurent::one(k);
    for i in 0..k {
        for j in i + 1..k {
            let factor = &MultiLaurent::variable(k, i) - &MultiLaurent::variable(k, j);
            acc = &acc * &factor;
        }
    }
    acc
}

/// `det[z_i^{e_j}]` expanded over permutations.
pub fn alternant(exps: &[i64]) -> MultiLaurent {
    let k = exps.len();
    let mut out = MultiLaurent::zero(k);
    for (perm, sign) in permutations(k) {
        let e: Vec<i64> = perm.iter().map(|&j| exps[j]).collect();
        out.add_term(e, SymFun::constant(rat(sign)));
    }
    out
}

/// `a_δ(z)` as the determinant `det[z_i^{k−j}]`.
pub fn vandermonde_determinant(k: usize) -> MultiLaurent {
    let delta: Vec<i64> = (0..k as i64).rev().collect();
    alternant(&delta)
}

/// All permutations of `0..k` with their signs.
pub fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        let k = used.len();
        if cur.len() == k {
            let mut inv = 0;
            for a in 0..k {
                for b in a + 1..k {
                    if cur[a] > cur[b] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for j in 0..k {
            if !used[j] {
                used[j] = true;
                cur.push(j);
                go(cur, used, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// True when every coefficient is a constant (degree-0 symmetric function).
#[cfg(test)]
fn has_constant_coefficients(m: &MultiLaurent) -> bool {
    m.terms().all(|(_, f)| f.max_degree().unwrap_or(0) == 0)
}
