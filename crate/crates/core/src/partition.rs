use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{invalid, Result, SerpError};

/// An integer partition: weakly decreasing positive parts.
///
/// Ordering is lexicographic on the parts, which is what the `BTreeMap`-backed
/// containers in this crate rely on for deterministic iteration.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return invalid(format!("partition parts must be positive: {parts:?}"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("partition parts must be weakly decreasing: {parts:?}"));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangle `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: u32) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.0.iter().filter(|&&p| p == part).count() as u32
    }

    /// `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z_lambda(&self) -> BigInt {
        let mut z = BigInt::one();
        for (part, mult) in self.multiplicities() {
            for t in 1..=mult {
                z *= BigInt::from(part) * BigInt::from(t);
            }
        }
        z
    }

    /// `∏ m_i!`, the order of the stabilizer of the parts.
    pub fn multiplicity_factorial(&self) -> BigInt {
        let mut f = BigInt::one();
        for mult in self.multiplicities().into_values() {
            for t in 1..=mult {
                f *= BigInt::from(t);
            }
        }
        f
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first).map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32).collect();
        Partition(parts)
    }

    /// Dominance order: `self ≤ other` iff every partial sum of `self` is at
    /// most the corresponding partial sum of `other`. Sizes must agree.
    pub fn is_dominated_by(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// True when the diagram fits inside `rows × cols`.
    pub fn fits_in_box(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    /// Diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && (0..self.len()).all(|i| self.part(i) <= other.part(i))
    }

    /// Union of the multisets of parts; indexes the product `p_λ p_μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn with_part(&self, part: u32) -> Partition {
        self.union(&Partition(vec![part]))
    }

    /// Removes one copy of `part`, if present.
    pub fn without_part(&self, part: u32) -> Option<Partition> {
        let idx = self.0.iter().position(|&p| p == part)?;
        let mut parts = self.0.clone();
        parts.remove(idx);
        Some(Partition(parts))
    }

    /// Parts padded with zeros to length `len` (panics if `len` is too short).
    pub fn padded(&self, len: usize) -> Vec<u32> {
        assert!(len >= self.len(), "cannot pad {self} to length {len}");
        let mut v = self.0.clone();
        v.resize(len, 0);
        v
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all_of(n: u32) -> Vec<Partition> {
        Self::bounded(n, usize::MAX, n)
    }

    /// Partitions of `n` with at most `max_len` parts, each at most `max_part`.
    pub fn bounded(n: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
        fn go(rest: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=max_part.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, max_part, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions fitting in the `rows × cols` box, by increasing size.
    pub fn in_box(rows: usize, cols: u32) -> Vec<Partition> {
        (0..=rows as u32 * cols).flat_map(|n| Self::bounded(n, rows, cols)).collect()
    }

    /// All partitions of size at most `n`, by increasing size.
    pub fn up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Self::all_of).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = SerpError;

    /// Accepts `2,2,1`, `(2,2,1)` or the empty string / `()`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| SerpError::InvalidArgument(format!("bad part {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = SerpError;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 0, 3]), p(&[3, 1]));
    }

    #[test]
    fn z_lambda_values() {
        assert_eq!(p(&[1, 1, 1]).z_lambda(), BigInt::from(6));
        assert_eq!(p(&[3]).z_lambda(), BigInt::from(3));
        assert_eq!(p(&[2, 2, 1]).z_lambda(), BigInt::from(8));
        assert_eq!(Partition::empty().z_lambda(), BigInt::from(1));
    }

    #[test]
    fn counts_and_boxes() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::in_box(2, 2).len(), 6);
        assert_eq!(Partition::in_box(3, 3).len(), 20);
    }

    #[test]
    fn conjugate_and_dominance() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert!(p(&[1, 1, 1]).is_dominated_by(&p(&[2, 1])));
        assert!(!p(&[3]).is_dominated_by(&p(&[2, 1])));
    }

    #[test]
    fn parse_and_display() {
        let q: Partition = "(2,2,1)".parse().unwrap();
        assert_eq!(q, p(&[2, 2, 1]));
        assert_eq!(q.to_string(), "(2,2,1)");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,3".parse::<Partition>().is_err());
    }
}
