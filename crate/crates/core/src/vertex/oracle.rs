use std::collections::BTreeMap;

use num_traits::One;

use super::laurent::{alternant, vandermonde_determinant};
use crate::error::{invalid, Result};
use crate::linalg::SpanBasis;
use crate::partition::Partition;
use crate::report::CheckSet;
use crate::symfun::{kostka_number, schur_to_p, Rational, SymFun, Workspace};

/// Memoised Schur functions.
#[derive(Default)]
pub(crate) struct SchurCache {
    cache: BTreeMap<Partition, SymFun>,
}

impl SchurCache {
    pub(crate) fn get(&mut self, lambda: &Partition) -> SymFun {
        self.cache.entry(lambda.clone()).or_insert_with(|| schur_to_p(lambda)).clone()
    }
}

/// `ẽ_{α_1} ⋯ ẽ_{α_k} Ω_{−2k}` as the constant term
/// `[1] ∏_j z_j^{α_j} a_δ(z) Σ_{l(λ) ≤ k} a_{λ+δ}(z^{−1}) s_λ`,
/// where only `|λ| = Σ α_j` can contribute.
pub fn e_monomial_oracle(k: usize, alpha: &[u32], ws: &Workspace) -> Result<SymFun> {
    e_monomial_oracle_cached(k, alpha, ws, &mut SchurCache::default())
}

pub(crate) fn e_monomial_oracle_cached(
    k: usize,
    alpha: &[u32],
    ws: &Workspace,
    schur: &mut SchurCache,
) -> Result<SymFun> {
    if k == 0 {
        return invalid("k must be positive");
    }
    if alpha.len() != k {
        return invalid(format!("expected {k} exponents, got {}", alpha.len()));
    }
    if let Some(a) = alpha.iter().find(|&&a| a as usize > k) {
        return invalid(format!("exponent {a} outside [0, {k}]"));
    }
    let degree: u32 = alpha.iter().sum();
    ws.check_degree(degree)?;
    let shift: Vec<i64> = alpha.iter().map(|&a| a as i64).collect();
    let front = vandermonde_determinant(k).shift(&shift);
    let mut out = SymFun::zero();
    for lambda in Partition::bounded(degree, k, degree) {
        let exps: Vec<i64> =
            lambda.padded(k).into_iter().enumerate().map(|(j, p)| -((p as usize + k - 1 - j) as i64)).collect();
        let c = front.constant_term_of_product(&alternant(&exps)).coeff(&Partition::empty());
        if c != Rational::from_integer(0.into()) {
            out = &out + &schur.get(&lambda).scale(&c);
        }
    }
    Ok(out)
}

/// `∏_j r_j!` for `μ` padded with zeros to `k` parts.
pub fn padded_multiplicity_factorial(mu: &Partition, k: usize) -> Rational {
    let zeros = k - mu.len();
    let mut f = Rational::from_integer(mu.multiplicity_factorial());
    for t in 1..=zeros {
        f *= Rational::from_integer((t as i64).into());
    }
    f
}

/// The right side of the vertex-operator formula for `s_ν`:
/// `Σ_{μ ⊂ (k^k), |μ| = |ν|} K_{νμ} / ∏ r_j! · ẽ_{μ_1} ⋯ ẽ_{μ_k} Ω_{−2k}`.
pub fn schur_constant_term(k: usize, nu: &Partition, ws: &Workspace) -> Result<SymFun> {
    schur_constant_term_cached(k, nu, ws, &mut SchurCache::default(), &mut BTreeMap::new())
}

fn schur_constant_term_cached(
    k: usize,
    nu: &Partition,
    ws: &Workspace,
    schur: &mut SchurCache,
    oracle: &mut BTreeMap<Partition, SymFun>,
) -> Result<SymFun> {
    let mut rhs = SymFun::zero();
    for mu in Partition::bounded(nu.size(), k, k as u32) {
        let kn = kostka_number(nu, &mu)?;
        if kn == 0 {
            continue;
        }
        let vec = match oracle.get(&mu) {
            Some(v) => v.clone(),
            None => {
                let v = e_monomial_oracle_cached(k, &mu.padded(k), ws, schur)?;
                oracle.insert(mu.clone(), v.clone());
                v
            }
        };
        let c = Rational::from_integer((kn as i64).into()) / padded_multiplicity_factorial(&mu, k);
        rhs = &rhs + &vec.scale(&c);
    }
    Ok(rhs)
}

/// Every `ν ⊂ (k^k)` reproduced by the constant-term formula.
pub fn verify_schur_constant_terms(k: usize, ws: &Workspace) -> Result<CheckSet> {
    if k == 0 {
        return invalid("k must be positive");
    }
    ws.check_degree((k * k) as u32)?;
    let mut schur = SchurCache::default();
    let mut oracle = BTreeMap::new();
    let mut set = CheckSet::new();
    for nu in Partition::in_box(k, k as u32) {
        let rhs = schur_constant_term_cached(k, &nu, ws, &mut schur, &mut oracle)?;
        let lhs = schur.get(&nu);
        set.equal(format!("k={k} s_{nu} = sum over mu of K/r! e-monomials"), &lhs, &rhs);
    }
    Ok(set)
}

/// Weakly decreasing `α` of length `k` with entries in `[0, max]`.
pub fn multisets(k: usize, max: u32) -> Vec<Vec<u32>> {
    fn go(k: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let top = cur.last().copied().unwrap_or(max);
        for a in (0..=top).rev() {
            cur.push(a);
            go(k, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, max, &mut Vec::new(), &mut out);
    out
}

/// Coordinates of `f` on the power sums of degree `≤ max_degree`.
pub(crate) fn coordinates(f: &SymFun, basis: &[Partition]) -> Vec<Rational> {
    basis.iter().map(|l| f.coeff(l)).collect()
}

/// The `C(2n, n)` vectors `ẽ_α Ω_{−2n}` with `α` a multiset of size `n` from
/// `{0, …, n}` are independent, have the graded dimensions of the `n × n`
/// box, and span the Schur functions in that box.
pub fn verify_ebasis(n: usize, ws: &Workspace) -> Result<CheckSet> {
    if n == 0 {
        return invalid("n must be positive");
    }
    let top = (n * n) as u32;
    ws.check_degree(top)?;
    let coords = Partition::up_to(top);
    let mut schur = SchurCache::default();
    let mut span = SpanBasis::new(coords.len());
    let alphas = multisets(n, n as u32);
    let mut by_degree = vec![0usize; top as usize + 1];
    for alpha in &alphas {
        let v = e_monomial_oracle_cached(n, alpha, ws, &mut schur)?;
        span.extend(&coordinates(&v, &coords))?;
        by_degree[alpha.iter().sum::<u32>() as usize] += 1;
    }
    let box_parts = Partition::in_box(n, n as u32);
    let mut box_by_degree = vec![0usize; top as usize + 1];
    for l in &box_parts {
        box_by_degree[l.size() as usize] += 1;
    }
    let mut set = CheckSet::new();
    let expected = num_integer::binomial(2 * n, n);
    set.equal(format!("n={n} number of e-monomials = C(2n,n)"), &alphas.len(), &expected);
    set.equal(format!("n={n} rank of e-monomials"), &span.dim(), &alphas.len());
    set.equal(format!("n={n} graded dimensions = partitions in the box"), &by_degree, &box_by_degree);
    let mut missing = Vec::new();
    for l in &box_parts {
        if !span.contains(&coordinates(&schur.get(l), &coords))? {
            missing.push(l.to_string());
        }
    }
    set.equal(format!("n={n} Schur functions in the box lie in the span"), &missing, &Vec::<String>::new());
    Ok(set)
}

/// `1/∏ r_j!` as used in [`schur_constant_term`], exposed for the harness.
pub fn inverse_padded_factorial(mu: &Partition, k: usize) -> Rational {
    Rational::one() / padded_multiplicity_factorial(mu, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::rat;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn oracle_examples() {
        let ws = Workspace::default();
        assert_eq!(e_monomial_oracle(1, &[1], &ws).unwrap(), SymFun::p_of(&[1]));
        assert_eq!(e_monomial_oracle(1, &[0], &ws).unwrap(), SymFun::one());
        assert_eq!(e_monomial_oracle(2, &[1, 1], &ws).unwrap(), schur_to_p(&part(&[1, 1])).scale(&rat(2)));
        assert!(e_monomial_oracle(2, &[3, 0], &ws).is_err());
        assert!(e_monomial_oracle(2, &[1], &ws).is_err());
    }

    #[test]
    fn oracle_is_symmetric_and_homogeneous() {
        let ws = Workspace::default();
        for alpha in multisets(3, 3) {
            let v = e_monomial_oracle(3, &alpha, &ws).unwrap();
            assert!(!v.is_zero());
            assert_eq!(v.degree(), Some(alpha.iter().sum()));
            let mut rev = alpha.clone();
            rev.reverse();
            assert_eq!(e_monomial_oracle(3, &rev, &ws).unwrap(), v);
        }
    }

    #[test]
    fn schur_constant_terms_small() {
        let ws = Workspace::default();
        for k in 1..=2 {
            let c = verify_schur_constant_terms(k, &ws).unwrap();
            assert!(c.all_passed(), "{:?}", c.failures().collect::<Vec<_>>());
        }
        assert_eq!(verify_schur_constant_terms(2, &ws).unwrap().len(), 6);
    }

    #[test]
    fn ebasis_small() {
        let ws = Workspace::default();
        for n in 1..=2 {
            let c = verify_ebasis(n, &ws).unwrap();
            assert!(c.all_passed(), "{:?}", c.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(2, 2).len(), 6);
        assert_eq!(multisets(3, 3).len(), 20);
        assert_eq!(padded_multiplicity_factorial(&part(&[1]), 3), rat(2));
        assert_eq!(inverse_padded_factorial(&part(&[1, 1]), 2), crate::symfun::ratio(1, 2));
    }
}
