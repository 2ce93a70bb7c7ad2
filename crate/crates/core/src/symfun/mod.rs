//! The ring of symmetric functions over the rationals, stored in the power-sum
//! basis `p_λ = p_{λ1} p_{λ2} ⋯`.

mod kostka;
mod schur;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, SerpError};
use crate::partition::Partition;

pub use kostka::{kostka_foulkes_standard, kostka_number, maj_qcharacter};
pub use schur::{complete, elementary, schur_to_p};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `num/den` (or just `num` for integers).
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A finite rational combination of power sums.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SymFun {
    terms: BTreeMap<Partition, Rational>,
}

impl SymFun {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Partition::empty(), c)
    }

    /// The basis element `p_λ`.
    pub fn p(lambda: Partition) -> Self {
        Self::term(lambda, Rational::one())
    }

    /// `p_λ` from a slice of parts in any order.
    pub fn p_of(parts: &[u32]) -> Self {
        Self::p(Partition::from_unsorted(parts.to_vec()))
    }

    pub fn term(lambda: Partition, c: Rational) -> Self {
        let mut f = Self::zero();
        f.add_term(lambda, c);
        f
    }

    /// Builds `Σ c p_λ` from `(c, parts)` pairs with integer coefficients.
    pub fn from_int_terms(terms: &[(i64, &[u32])]) -> Self {
        let mut f = Self::zero();
        for &(c, parts) in terms {
            f.add_term(Partition::from_unsorted(parts.to_vec()), rat(c));
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common degree of all terms, `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Partition::size);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn homogeneous_part(&self, d: u32) -> SymFun {
        SymFun {
            terms: self.terms.iter().filter(|(l, _)| l.size() == d).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SymFun {
        if c.is_zero() {
            return SymFun::zero();
        }
        SymFun { terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect() }
    }

    /// Multiplication by `p_j`.
    pub fn times_p(&self, j: u32) -> SymFun {
        SymFun { terms: self.terms.iter().map(|(l, c)| (l.with_part(j), c.clone())).collect() }
    }

    /// `∂/∂p_j`, treating the `p_j` as independent variables.
    pub fn d_dp(&self, j: u32) -> SymFun {
        let mut out = SymFun::zero();
        for (l, c) in &self.terms {
            let m = l.multiplicity(j);
            if m > 0 {
                let rest = l.without_part(j).expect("part present");
                out.add_term(rest, c * rat(m as i64));
            }
        }
        out
    }

    /// The pairing `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ 2^{l(λ)}` that makes the boson
    /// action unitary.
    pub fn inner_product(&self, other: &SymFun) -> Rational {
        self.pairing(other, |l| Rational::from_integer(l.z_lambda() << l.len()))
    }

    /// The Hall inner product `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ`.
    pub fn hall_inner_product(&self, other: &SymFun) -> Rational {
        self.pairing(other, |l| Rational::from_integer(l.z_lambda()))
    }

    fn pairing(&self, other: &SymFun, weight: impl Fn(&Partition) -> Rational) -> Rational {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Rational::zero();
        for (l, c) in &small.terms {
            if let Some(d) = large.terms.get(l) {
                acc += c * d * weight(l);
            }
        }
        acc
    }

    /// `Some(c)` with `self = c · other` when the two are proportional and
    /// `other` is nonzero.
    pub fn ratio_to(&self, other: &SymFun) -> Option<Rational> {
        let (lead, c) = other.terms.iter().next()?;
        let r = self.coeff(lead) / c;
        (&other.scale(&r) == self).then_some(r)
    }
}

impl Add for &SymFun {
    type Output = SymFun;
    fn add(self, rhs: &SymFun) -> SymFun {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymFun {
    type Output = SymFun;
    fn sub(self, rhs: &SymFun) -> SymFun {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SymFun {
    type Output = SymFun;
    fn neg(self) -> SymFun {
        self.scale(&-Rational::one())
    }
}

impl Mul for &SymFun {
    type Output = SymFun;
    fn mul(self, rhs: &SymFun) -> SymFun {
        let mut out = SymFun::zero();
        for (l1, c1) in &self.terms {
            for (l2, c2) in &rhs.terms {
                out.add_term(l1.union(l2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for SymFun {
    /// `1/12 p(1,1,1,1) + 1/4 p(2,2) - 1/3 p(3,1)`; the empty partition prints
    /// as a bare constant, first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            let mag = format_rational(&c.abs());
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            if l.is_empty() {
                write!(f, "{mag}")?;
            } else if c.abs().is_one() {
                write!(f, "p{l}")?;
            } else {
                write!(f, "{mag} p{l}")?;
            }
        }
        Ok(())
    }
}

/// Degree bound for series computations. In strict mode any result past the
/// bound is an error; in truncating mode the excess terms are dropped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Workspace {
    pub degree_bound: u32,
    pub truncate: bool,
}

impl Default for Workspace {
    fn default() -> Self {
        Self { degree_bound: 12, truncate: false }
    }
}

impl Workspace {
    pub fn strict(degree_bound: u32) -> Self {
        Self { degree_bound, truncate: false }
    }

    pub fn truncating(degree_bound: u32) -> Self {
        Self { degree_bound, truncate: true }
    }

    /// Applies the bound to `f`.
    pub fn admit(&self, f: SymFun) -> Result<SymFun> {
        match f.max_degree() {
            Some(d) if d > self.degree_bound => {
                if self.truncate {
                    Ok(SymFun { terms: f.terms.into_iter().filter(|(l, _)| l.size() <= self.degree_bound).collect() })
                } else {
                    Err(SerpError::DegreeOverflow { degree: d, bound: self.degree_bound })
                }
            }
            _ => Ok(f),
        }
    }

    pub fn multiply(&self, f: &SymFun, g: &SymFun) -> Result<SymFun> {
        self.admit(f * g)
    }

    pub fn check_degree(&self, d: u32) -> Result<()> {
        if d > self.degree_bound && !self.truncate {
            return Err(SerpError::DegreeOverflow { degree: d, bound: self.degree_bound });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_operations() {
        let p1 = SymFun::p_of(&[1]);
        assert_eq!(&p1 * &p1, SymFun::p_of(&[1, 1]));
        let f = SymFun::from_int_terms(&[(1, &[3]), (1, &[1, 1, 1])]);
        assert_eq!(&f * &SymFun::one(), f);
        assert_eq!(&SymFun::p_of(&[2]) * &SymFun::p_of(&[2, 1]), SymFun::p_of(&[2, 2, 1]));
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn inner_products() {
        let p1 = SymFun::p_of(&[1]);
        assert_eq!(p1.inner_product(&p1), rat(2));
        let p111 = SymFun::p_of(&[1, 1, 1]);
        assert_eq!(p111.inner_product(&p111), rat(48));
        let a = SymFun::from_int_terms(&[(1, &[1, 1, 1]), (-1, &[3])]);
        let b = SymFun::from_int_terms(&[(1, &[1, 1, 1]), (8, &[3])]);
        assert_eq!(a.inner_product(&b), rat(0));
        assert_eq!(p111.hall_inner_product(&p111), rat(6));
    }

    #[test]
    fn derivative_and_degree() {
        let f = SymFun::p_of(&[2, 2, 1]);
        assert_eq!(f.d_dp(2), SymFun::from_int_terms(&[(2, &[2, 1])]));
        assert_eq!(f.d_dp(3), SymFun::zero());
        assert_eq!(f.degree(), Some(5));
        let mixed = &f + &SymFun::one();
        assert_eq!(mixed.degree(), None);
        assert_eq!(mixed.homogeneous_part(0), SymFun::one());
    }

    #[test]
    fn workspace_policy() {
        let f = &SymFun::p_of(&[4]) + &SymFun::p_of(&[1]);
        assert!(matches!(Workspace::strict(3).admit(f.clone()), Err(SerpError::DegreeOverflow { .. })));
        assert_eq!(Workspace::truncating(3).admit(f.clone()).unwrap(), SymFun::p_of(&[1]));
        assert_eq!(Workspace::strict(4).admit(f.clone()).unwrap(), f);
    }

    #[test]
    fn display() {
        let f = SymFun::from_int_terms(&[(1, &[1, 1]), (-3, &[2]), (2, &[])]);
        assert_eq!(f.to_string(), "2 + p(1,1) - 3 p(2)");
        assert_eq!(format_rational(&ratio(6, 4)), "3/2");
    }
}
