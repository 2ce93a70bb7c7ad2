use num_traits::One;

use super::{Rational, SymFun};
use crate::partition::Partition;

/// `h_0, …, h_n` in the power-sum basis, from `n h_n = Σ_{i=1}^n p_i h_{n−i}`.
fn complete_upto(n: u32) -> Vec<SymFun> {
    newton(n, false)
}

/// `e_0, …, e_n`, from `n e_n = Σ_{i=1}^n (−1)^{i−1} p_i e_{n−i}`.
fn elementary_upto(n: u32) -> Vec<SymFun> {
    newton(n, true)
}

fn newton(n: u32, alternate: bool) -> Vec<SymFun> {
    let mut out = vec![SymFun::one()];
    for m in 1..=n {
        let mut acc = SymFun::zero();
        for i in 1..=m {
            let term = out[(m - i) as usize].times_p(i);
            if alternate && i % 2 == 0 {
                acc = &acc - &term;
            } else {
                acc = &acc + &term;
            }
        }
        out.push(acc.scale(&Rational::new(One::one(), (m as i64).into())));
    }
    out
}

/// The complete homogeneous symmetric function `h_n`.
pub fn complete(n: u32) -> SymFun {
    complete_upto(n).pop().expect("nonempty")
}

/// The elementary symmetric function `e_n`.
pub fn elementary(n: u32) -> SymFun {
    elementary_upto(n).pop().expect("nonempty")
}

/// The Schur function `s_λ` by Jacobi–Trudi: `det[h_{λ_i − i + j}]`, or the
/// dual form `det[e_{λ'_i − i + j}]` when that matrix is smaller.
pub fn schur_to_p(lambda: &Partition) -> SymFun {
    if lambda.is_empty() {
        return SymFun::one();
    }
    let conj = lambda.conjugate();
    let (rows, table) = if conj.len() < lambda.len() {
        (conj, elementary_upto(lambda.size()))
    } else {
        (lambda.clone(), complete_upto(lambda.size()))
    };
    let l = rows.len();
    let entry = |i: usize, j: usize| -> Option<&SymFun> {
        let idx = rows.part(i) as i64 - i as i64 + j as i64;
        (idx >= 0).then(|| &table[idx as usize])
    };
    determinant(l, entry)
}

/// Determinant of an `l × l` matrix with entries in Λ, expanded row by row
/// over subsets of used columns. `None` entries are zero.
fn determinant<'a>(l: usize, entry: impl Fn(usize, usize) -> Option<&'a SymFun>) -> SymFun {
    let full = 1usize << l;
    let mut dp: Vec<SymFun> = vec![SymFun::zero(); full];
    dp[0] = SymFun::one();
    for mask in 0..full {
        if dp[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == l {
            continue;
        }
        let cur = dp[mask].clone();
        for col in 0..l {
            if mask & (1 << col) != 0 {
                continue;
            }
            let Some(e) = entry(row, col) else { continue };
            if e.is_zero() {
                continue;
            }
            // sign of placing `col` after the columns already used
            let inversions = (mask >> col).count_ones();
            let mut term = &cur * e;
            if inversions % 2 == 1 {
                term = -&term;
            }
            dp[mask | (1 << col)] = &dp[mask | (1 << col)] + &term;
        }
    }
    dp.pop().unwrap_or_else(SymFun::zero)
}

/// `n!` as a rational.
#[cfg(test)]
fn factorial(n: u32) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, i| acc * super::rat(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::{rat, ratio};

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn small_complete_and_elementary() {
        assert_eq!(complete(1), SymFun::p_of(&[1]));
        let h2 = &SymFun::p_of(&[1, 1]).scale(&ratio(1, 2)) + &SymFun::p_of(&[2]).scale(&ratio(1, 2));
        assert_eq!(complete(2), h2);
        let e2 = &SymFun::p_of(&[1, 1]).scale(&ratio(1, 2)) - &SymFun::p_of(&[2]).scale(&ratio(1, 2));
        assert_eq!(elementary(2), e2);
        assert_eq!(complete(0), SymFun::one());
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_to_p(&part(&[1])), SymFun::p_of(&[1]));
        assert_eq!(schur_to_p(&part(&[2])), complete(2));
        assert_eq!(schur_to_p(&part(&[1, 1])), elementary(2));
        let s22 = SymFun::from_int_terms(&[(1, &[1, 1, 1, 1]), (3, &[2, 2]), (-4, &[3, 1])]).scale(&ratio(1, 12));
        assert_eq!(schur_to_p(&part(&[2, 2])), s22);
        assert_eq!(schur_to_p(&Partition::empty()), SymFun::one());
    }

    #[test]
    fn both_jacobi_trudi_forms_agree() {
        for n in 1..=6 {
            for lambda in Partition::all_of(n) {
                let l = lambda.len();
                let h = complete_upto(n);
                let direct = determinant(l, |i, j| {
                    let idx = lambda.part(i) as i64 - i as i64 + j as i64;
                    (idx >= 0).then(|| &h[idx as usize])
                });
                assert_eq!(direct, schur_to_p(&lambda), "{lambda}");
            }
        }
    }

    #[test]
    fn standard_tableau_count_in_p1n_coefficient() {
        // f^{(3,2)} = 5, so [p_1^5] s_(3,2) = 5/5!
        let c = schur_to_p(&part(&[3, 2])).coeff(&part(&[1, 1, 1, 1, 1]));
        assert_eq!(c, rat(5) / factorial(5));
    }
}
