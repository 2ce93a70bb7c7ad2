use serde_json::json;

use super::laurent::MultiLaurent;
use crate::error::Result;
use crate::partition::Partition;
use crate::report::{Check, CheckSet};
use crate::symfun::{complete, kostka_number, rat, Rational, SymFun, Workspace};

/// `Γ_−(z) = Σ_{d ≤ t} H_d z^{−d}` with `H_d` the complete symmetric function.
pub fn gamma_minus_series(t: u32, ws: &Workspace) -> Result<MultiLaurent> {
    ws.check_degree(t)?;
    let mut out = MultiLaurent::zero(1);
    for d in 0..=t.min(ws.degree_bound) {
        out.add_term(vec![-(d as i64)], complete(d));
    }
    Ok(out)
}

/// The `z^a` coefficient of `Γ_+(z) = exp(−2 Σ_j z^j ∂/∂p_j)`:
/// `Σ_{λ ⊢ a} (−2)^{l(λ)} / ∏ m_i! · ∂_λ`.
pub fn gamma_plus_mode(a: u32, f: &SymFun) -> SymFun {
    let deg = f.max_degree().unwrap_or(0);
    if a > deg {
        return SymFun::zero();
    }
    let mut out = SymFun::zero();
    for lambda in Partition::all_of(a) {
        let mut g = f.clone();
        for &part in lambda.parts() {
            g = g.d_dp(part);
            if g.is_zero() {
                break;
            }
        }
        if g.is_zero() {
            continue;
        }
        let sign = if lambda.len() % 2 == 0 { 1 } else { -1 };
        let c = Rational::new((sign * (1i64 << lambda.len())).into(), lambda.multiplicity_factorial());
        out = &out + &g.scale(&c);
    }
    out
}

/// `Γ_+(z) f` as the substitution `p_j ↦ p_j − 2 z^j`, truncated at `z^t`.
pub fn gamma_plus_by_substitution(f: &SymFun, t: u32) -> MultiLaurent {
    let mut out = MultiLaurent::zero(1);
    for (lambda, c) in f.terms() {
        // ∏_i (p_{λ_i} − 2 z^{λ_i})
        let mut acc = MultiLaurent::monomial(vec![0], SymFun::constant(c.clone()));
        for &part in lambda.parts() {
            let factor = &MultiLaurent::monomial(vec![0], SymFun::p_of(&[part]))
                - &MultiLaurent::monomial(vec![part as i64], SymFun::constant(rat(2)));
            acc = (&acc * &factor).truncate(t as i64);
        }
        out = &out + &acc;
    }
    out
}

/// `Γ_+(z)Γ_−(w) = Γ_−(w)Γ_+(z)(1 − z/w)²` coefficientwise: at `z^a w^{−b}`,
/// `Γ_+^{(a)} H_b f = Σ_t c_t H_{b−t} Γ_+^{(a−t)} f` with `c = (1, −2, 1)`.
/// Checked on `p_λ`, `|λ| ≤ max_degree`, for `a + b ≤ order`.
pub fn verify_gamma_commutation(order: u32, max_degree: u32, ws: &Workspace) -> Result<CheckSet> {
    ws.check_degree(max_degree + order)?;
    let states: Vec<Partition> = Partition::up_to(max_degree);
    let h: Vec<SymFun> = (0..=order).map(complete).collect();
    let weights = [rat(1), rat(-2), rat(1)];
    let mut set = CheckSet::new();
    for a in 0..=order {
        for b in 0..=order - a {
            let name = format!("Gamma commutation at z^{a} w^-{b}");
            let mut failure = None;
            for lambda in &states {
                let f = SymFun::p(lambda.clone());
                let lhs = gamma_plus_mode(a, &(&h[b as usize] * &f));
                let mut rhs = SymFun::zero();
                for (t, c) in weights.iter().enumerate() {
                    let t = t as u32;
                    if t <= a && t <= b {
                        let term = &h[(b - t) as usize] * &gamma_plus_mode(a - t, &f);
                        rhs = &rhs + &term.scale(c);
                    }
                }
                if lhs != rhs {
                    failure = Some((lambda.clone(), lhs, rhs));
                    break;
                }
            }
            set.push(match failure {
                None => Check::verdict(name, true, states.len(), states.len()),
                Some((lambda, lhs, rhs)) => {
                    Check::verdict(name, false, lhs, rhs).with_witness(json!(lambda.to_string()))
                }
            });
        }
    }
    Ok(set)
}

/// `m_μ(x_1, …, x_k)` at `x = z^{sign}`.
fn monomial_symmetric(mu: &Partition, k: usize, sign: i64) -> MultiLaurent {
    let mut out = MultiLaurent::zero(k);
    if mu.len() > k {
        return out;
    }
    let mut exps: Vec<i64> = mu.padded(k).into_iter().map(|p| sign * p as i64).collect();
    // distinct permutations, starting from the sorted arrangement
    exps.sort_unstable();
    loop {
        out.add_term(exps.clone(), SymFun::one());
        if !next_permutation(&mut exps) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [i64]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else { return false };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `Γ_−(z_1) ⋯ Γ_−(z_k) · 1` expanded as a product of `H`-series against
/// `Σ_λ s_λ(z^{−1}) s_λ` with `s_λ(x) = Σ_μ K_{λμ} m_μ(x)`, both truncated
/// at total order `order`.
pub fn verify_cauchy(k: usize, order: u32, ws: &Workspace) -> Result<CheckSet> {
    let series = gamma_minus_series(order, ws)?;
    let mut product = MultiLaurent::one(k);
    for i in 0..k {
        product = (&product * &series.embed(k, &[i])).truncate(order as i64);
    }
    let mut cauchy = MultiLaurent::zero(k);
    for n in 0..=order {
        for lambda in Partition::all_of(n) {
            if lambda.len() > k {
                continue;
            }
            let s = crate::symfun::schur_to_p(&lambda);
            for mu in Partition::all_of(n) {
                let kn = kostka_number(&lambda, &mu)?;
                if kn == 0 || mu.len() > k {
                    continue;
                }
                let m = monomial_symmetric(&mu, k, -1);
                for (e, _) in m.terms() {
                    cauchy.add_term(e.clone(), s.scale(&rat(kn as i64)));
                }
            }
        }
    }
    let mut set = CheckSet::new();
    set.verdict(
        format!("Cauchy identity in {k} variables to order {order}"),
        product == cauchy,
        product.len(),
        cauchy.len(),
    );
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::ratio;

    #[test]
    fn gamma_minus_coefficients() {
        let g = gamma_minus_series(4, &Workspace::default()).unwrap();
        assert_eq!(g.coeff(&[0]), SymFun::one());
        assert_eq!(g.coeff(&[-1]), SymFun::p_of(&[1]));
        let h2 = &SymFun::p_of(&[1, 1]).scale(&ratio(1, 2)) + &SymFun::p_of(&[2]).scale(&ratio(1, 2));
        assert_eq!(g.coeff(&[-2]), h2);
        assert!(gamma_minus_series(13, &Workspace::default()).is_err());
    }

    #[test]
    fn gamma_plus_modes_match_substitution() {
        for lambda in Partition::up_to(5) {
            let f = SymFun::p(lambda);
            let sub = gamma_plus_by_substitution(&f, 6);
            for a in 0..=6u32 {
                assert_eq!(sub.coeff(&[a as i64]), gamma_plus_mode(a, &f), "{f} at {a}");
            }
        }
        assert_eq!(gamma_plus_mode(1, &SymFun::p_of(&[1])), SymFun::constant(rat(-2)));
    }

    #[test]
    fn commutation_low_order() {
        let c = verify_gamma_commutation(3, 3, &Workspace::default()).unwrap();
        assert!(c.all_passed(), "{:?}", c.failures().collect::<Vec<_>>());
        assert_eq!(c.len(), 10);
    }

    #[test]
    fn cauchy_small() {
        for k in 1..=2 {
            assert!(verify_cauchy(k, 4, &Workspace::default()).unwrap().all_passed());
        }
    }

    #[test]
    fn monomial_symmetric_terms() {
        let m = monomial_symmetric(&Partition::new(vec![2, 1]).unwrap(), 3, 1);
        assert_eq!(m.len(), 6);
        let m = monomial_symmetric(&Partition::new(vec![1, 1]).unwrap(), 2, -1);
        assert_eq!(m.len(), 1);
    }
}
