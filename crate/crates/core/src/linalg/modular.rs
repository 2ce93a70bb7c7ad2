//! Row spaces over `F_p` with `p = 2^61 − 1`. Ranks here are lower bounds
//! for the rational ranks of integer matrices, equal unless `p` divides every
//! maximal nonzero minor; the fusion code cross-checks against the exact path.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::error::{invalid, Result};
use crate::symfun::Rational;

pub const MODULUS: u64 = (1 << 61) - 1;

#[inline]
pub(crate) fn mod_mul(a: u64, b: u64) -> u64 {
    let x = a as u128 * b as u128;
    let lo = (x as u64) & MODULUS;
    let hi = (x >> 61) as u64;
    let mut s = lo + hi;
    while s >= MODULUS {
        s -= MODULUS;
    }
    s
}

#[inline]
pub(crate) fn mod_add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= MODULUS {
        s - MODULUS
    } else {
        s
    }
}

#[inline]
pub(crate) fn mod_sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + MODULUS - b
    }
}

pub(crate) fn mod_pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mod_mul(r, a);
        }
        a = mod_mul(a, a);
        e >>= 1;
    }
    r
}

pub(crate) fn mod_inv(a: u64) -> u64 {
    assert!(a != 0, "inverse of zero");
    mod_pow(a, MODULUS - 2)
}

fn reduce_bigint(x: &BigInt) -> u64 {
    let r = x.mod_floor(&BigInt::from(MODULUS));
    r.to_u64().expect("reduced below modulus")
}

/// Image of a rational in `F_p`, or `None` when `p` divides the denominator.
pub fn reduce_rational(x: &Rational) -> Option<u64> {
    let d = reduce_bigint(x.denom());
    if d == 0 {
        return None;
    }
    let n = if x.is_negative() { mod_sub(0, reduce_bigint(&-x.numer())) } else { reduce_bigint(x.numer()) };
    Some(mod_mul(n, mod_inv(d)))
}

/// A subspace of `F_p^n` in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModSpan {
    ambient: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl ModSpan {
    pub fn new(ambient: usize) -> Self {
        Self { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Adds `v` (entries already reduced mod p); returns whether the
    /// dimension grew.
    pub fn extend(&mut self, mut v: Vec<u64>) -> Result<bool> {
        if v.len() != self.ambient {
            return invalid(format!("vector of length {} in ambient dimension {}", v.len(), self.ambient));
        }
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(row).skip(p) {
                    if y != 0 {
                        *x = mod_sub(*x, mod_mul(c, y));
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|&x| x != 0) else { return Ok(false) };
        let inv = mod_inv(v[p]);
        for x in v.iter_mut().skip(p) {
            *x = mod_mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&v).skip(p) {
                    if y != 0 {
                        *x = mod_sub(*x, mod_mul(c, y));
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::{rat, ratio};

    #[test]
    fn field_arithmetic() {
        assert_eq!(mod_mul(MODULUS - 1, MODULUS - 1), 1);
        assert_eq!(mod_mul(mod_inv(12345), 12345), 1);
        assert_eq!(mod_add(MODULUS - 1, 2), 1);
        assert_eq!(reduce_rational(&rat(-1)), Some(MODULUS - 1));
        let half = reduce_rational(&ratio(1, 2)).unwrap();
        assert_eq!(mod_mul(half, 2), 1);
        let big = Rational::new(1.into(), BigInt::from(MODULUS));
        assert_eq!(reduce_rational(&big), None);
    }

    #[test]
    fn span_growth() {
        let mut s = ModSpan::new(3);
        assert!(s.extend(vec![1, 2, 3]).unwrap());
        assert!(!s.extend(vec![2, 4, 6]).unwrap());
        assert!(s.extend(vec![0, 1, 1]).unwrap());
        assert!(!s.extend(vec![1, 3, 4]).unwrap());
        assert!(s.extend(vec![0, 0, 5]).unwrap());
        assert_eq!(s.dim(), 3);
        assert!(s.extend(vec![1]).is_err());
    }
}
