//! Serpentine tableaux: infinite two-row tableaux that eventually follow the
//! alternating pattern of a principal tableau, and their stable major index.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{invalid, Result};
use crate::tableau::{enumerate_two_row_tableaux, tableaux_with_min_maj, TwoRowTableau};

/// An infinite tableau represented by a finite base of even size. The base is
/// kept canonical: the smallest even level past which every cell follows the
/// principal continuation, so structural equality is tail-equivalence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SerpentineTableau {
    base: TwoRowTableau,
}

impl SerpentineTableau {
    /// Wraps a finite tableau of even size, continued by iterating the
    /// embedding `N+1 ↦ row 1, N+2 ↦ row 2`.
    pub fn from_base(base: TwoRowTableau) -> Result<Self> {
        if !base.size().is_multiple_of(2) {
            return invalid(format!("base {base} has an odd number of cells"));
        }
        let mut base = base;
        while let Some(smaller) = base.unembed() {
            base = smaller;
        }
        Ok(Self { base })
    }

    /// The principal tableau `τ_k` (canonical base `[1 2 … 2k]`).
    pub fn principal(k: u32) -> Self {
        Self { base: TwoRowTableau::new((1..=2 * k).collect(), vec![]).expect("single row") }
    }

    pub fn base(&self) -> &TwoRowTableau {
        &self.base
    }

    /// Canonical (minimal) level.
    pub fn level(&self) -> usize {
        self.base.size()
    }

    /// `k` such that this tableau is tail-equivalent to `τ_k`.
    pub fn sector(&self) -> u32 {
        ((self.base.row1().len() - self.base.row2().len()) / 2) as u32
    }

    /// The truncation `[τ]_level`.
    pub fn at_level(&self, level: usize) -> Result<TwoRowTableau> {
        if !level.is_multiple_of(2) || level < self.level() {
            return invalid(format!("level {level} must be even and at least the canonical level {}", self.level()));
        }
        let mut t = self.base.clone();
        while t.size() < level {
            t = t.embed();
        }
        Ok(t)
    }

    /// `r(τ) = n² − maj([τ]_{2n})`, independent of the level `2n`.
    pub fn stable_major_index(&self) -> i64 {
        stable_index_at(&self.base)
    }
}

fn stable_index_at(t: &TwoRowTableau) -> i64 {
    let n = (t.size() / 2) as i64;
    n * n - t.maj() as i64
}

impl fmt::Display for SerpentineTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)
    }
}

/// `[τ_k]_level`: `1..2k` in the first row, then odd offsets continue the first
/// row and even offsets fill the second.
pub fn principal_tableau(k: u32, level: usize) -> Result<TwoRowTableau> {
    if !level.is_multiple_of(2) {
        return invalid(format!("level {level} is odd"));
    }
    if level < 2 * k as usize {
        return invalid(format!("level {level} is below 2k = {}", 2 * k));
    }
    SerpentineTableau::principal(k).at_level(level)
}

/// Every serpentine tableau with `r ≤ r_max`, as canonical representatives,
/// ordered by `(r, sector, base)`.
///
/// A canonical base of level `2n > 0` has no descent at `2n − 1`, so its maj is
/// at most `n(n−1)` and `r ≥ n`; listing tableaux of level `2(r_max + 1)` with
/// `maj ≥ n² − r_max` therefore reaches every class.
pub fn enumerate_serpentine(r_max: u32) -> Vec<SerpentineTableau> {
    let n = r_max as u64 + 1;
    let level = 2 * n as usize;
    let min_maj = (n * n).saturating_sub(r_max as u64);
    let found: BTreeSet<SerpentineTableau> = tableaux_with_min_maj(level, min_maj)
        .expect("level within limits")
        .into_iter()
        .map(|t| SerpentineTableau::from_base(t).expect("even level"))
        .collect();
    let mut out: Vec<_> = found.into_iter().collect();
    out.sort_by_key(|s| (s.stable_major_index(), s.sector(), s.base.clone()));
    out
}

/// `T^(N)`: the tableaux that agree with some principal tableau from level `N`
/// on, i.e. the continuations of every two-row tableau with `N` cells.
pub fn serpentine_level_set(level: usize) -> Result<Vec<SerpentineTableau>> {
    if !level.is_multiple_of(2) {
        return invalid(format!("level {level} is odd"));
    }
    if level == 0 {
        return Ok(vec![SerpentineTableau::principal(0)]);
    }
    let mut out = enumerate_two_row_tableaux(level, None)?
        .into_iter()
        .map(SerpentineTableau::from_base)
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_key(|s| (s.stable_major_index(), s.sector(), s.base.clone()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TwoRowTableau {
        s.parse().unwrap()
    }

    fn serp(s: &str) -> SerpentineTableau {
        SerpentineTableau::from_base(t(s)).unwrap()
    }

    #[test]
    fn principal_tableaux() {
        assert_eq!(principal_tableau(0, 4).unwrap(), t("[1 3 / 2 4]"));
        assert_eq!(principal_tableau(2, 4).unwrap(), t("[1 2 3 4]"));
        assert_eq!(principal_tableau(1, 4).unwrap(), t("[1 2 3 / 4]"));
        assert!(principal_tableau(1, 3).is_err());
        assert!(principal_tableau(3, 4).is_err());
        for k in 0..4u32 {
            for n in k as usize..8 {
                let tab = principal_tableau(k, 2 * n).unwrap();
                assert_eq!(tab.maj() as i64, (n * n) as i64 - (k * k) as i64);
            }
        }
    }

    #[test]
    fn stable_major_index_values() {
        for level in [0usize, 2, 6, 10] {
            let tau0 = SerpentineTableau::from_base(principal_tableau(0, level).unwrap()).unwrap();
            assert_eq!(tau0.stable_major_index(), 0);
        }
        assert_eq!(serp("[1 2 4 / 3]").stable_major_index(), 2);
        assert_eq!(serp("[1 3 4 / 2 5 6]").stable_major_index(), 4);
        assert_eq!(serp("[1 2 4 / 3 5 6]").stable_major_index(), 3);
    }

    #[test]
    fn canonical_form_is_tail_equivalence() {
        let a = serp("[1 2 4 / 3]");
        let b = SerpentineTableau::from_base(t("[1 2 4 / 3]").embed().embed()).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.level(), 4);
        assert_eq!(serp("[1 2 3 / 4]"), SerpentineTableau::principal(1));
        assert_eq!(serp("[1 3 / 2 4]"), SerpentineTableau::principal(0));
        assert!(SerpentineTableau::from_base(t("[1 2 3]")).is_err());
        assert!(a.at_level(2).is_err());
        assert_eq!(a.at_level(6).unwrap(), t("[1 2 4 5 / 3 6]"));
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate_serpentine(0), vec![SerpentineTableau::principal(0)]);
        let four = enumerate_serpentine(4);
        let counts: Vec<usize> = (0..=4).map(|r| four.iter().filter(|s| s.stable_major_index() == r).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5]);
    }

    #[test]
    fn level_sets() {
        assert_eq!(serpentine_level_set(0).unwrap().len(), 1);
        assert_eq!(serpentine_level_set(2).unwrap().len(), 2);
        assert_eq!(serpentine_level_set(4).unwrap().len(), 6);
        assert!(serpentine_level_set(3).is_err());
    }
}
