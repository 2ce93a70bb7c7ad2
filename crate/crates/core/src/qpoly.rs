use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer Laurent polynomial in `q`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// `Σ q^e` over the given exponents (with repetition).
    pub fn from_exponents<I: IntoIterator<Item = i64>>(exps: I) -> Self {
        let mut p = Self::zero();
        for e in exps {
            p.add_term(e, 1);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// `p(q) ↦ p(1/q)`.
    pub fn invert_variable(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c)))
    }

    /// Multiplication by `q^s`.
    pub fn shift(&self, s: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e + s, c)))
    }

    /// Drops every term of degree above `max_exp`.
    pub fn truncate(&self, max_exp: i64) -> Self {
        Self::from_terms(self.terms().filter(|&(e, _)| e <= max_exp))
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e, c * k)))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.scale(-1)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{a}q")?,
                (_, 1) => write!(f, "q^{e}")?,
                _ => write!(f, "{a}q^{e}")?,
            }
        }
        Ok(())
    }
}

/// `∏_{i=1}^{max_exp} (1 − q^i)^{-1}` truncated to degree `max_exp`, built by
/// multiplying out geometric series.
pub fn partition_generating_function(max_exp: u32) -> QPoly {
    let d = max_exp as i64;
    let mut acc = QPoly::one();
    for i in 1..=d {
        let geometric = QPoly::from_exponents((0..=d / i).map(|t| t * i));
        acc = (&acc * &geometric).truncate(d);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let a = QPoly::from_exponents([2, 4]);
        let b = QPoly::from_exponents([1, 2, 3]);
        assert_eq!(a.to_string(), "q^2 + q^4");
        assert_eq!((&a - &a), QPoly::zero());
        assert_eq!((&a * &QPoly::one()), a);
        assert_eq!(b.eval_at_one(), 3);
        assert_eq!(a.invert_variable().shift(6), a);
        assert_eq!(QPoly::from_terms([(0, -1), (3, 2)]).to_string(), "-1 + 2q^3");
    }

    #[test]
    fn partition_numbers() {
        let g = partition_generating_function(12);
        let coeffs: Vec<i64> = (0..=12).map(|e| g.coeff(e)).collect();
        assert_eq!(coeffs, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }
}
