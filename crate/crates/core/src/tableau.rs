//! Standard Young tableaux with at most two rows and their statistics.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Result, SerpError};
use crate::partition::Partition;

/// Largest tableau accepted by the constructors.
pub const MAX_CELLS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Row {
    First,
    Second,
}

/// A standard Young tableau with at most two rows.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoRowTableau {
    row1: Vec<u32>,
    row2: Vec<u32>,
}

impl TwoRowTableau {
    pub fn new(row1: Vec<u32>, row2: Vec<u32>) -> Result<Self> {
        let n = row1.len() + row2.len();
        if n > MAX_CELLS {
            return invalid(format!("tableau has {n} cells, limit is {MAX_CELLS}"));
        }
        if row1.len() < row2.len() {
            return invalid("second row longer than the first");
        }
        for row in [&row1, &row2] {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return invalid(format!("row {row:?} is not strictly increasing"));
            }
        }
        let mut seen = vec![false; n + 1];
        for &x in row1.iter().chain(&row2) {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return invalid(format!("entries must be exactly 1..={n}"));
            }
            seen[x] = true;
        }
        if row2.iter().zip(&row1).any(|(b, a)| b <= a) {
            return invalid("columns are not strictly increasing");
        }
        Ok(Self { row1, row2 })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn row1(&self) -> &[u32] {
        &self.row1
    }

    pub fn row2(&self) -> &[u32] {
        &self.row2
    }

    pub fn size(&self) -> usize {
        self.row1.len() + self.row2.len()
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(vec![self.row1.len() as u32, self.row2.len() as u32])
    }

    /// Row and column (0-based) holding the entry `x`.
    pub fn position(&self, x: u32) -> Option<(Row, usize)> {
        if let Some(c) = self.row1.iter().position(|&v| v == x) {
            return Some((Row::First, c));
        }
        self.row2.iter().position(|&v| v == x).map(|c| (Row::Second, c))
    }

    fn rows_by_entry(&self) -> Vec<(Row, usize)> {
        let mut pos = vec![(Row::First, 0); self.size() + 1];
        for (c, &x) in self.row1.iter().enumerate() {
            pos[x as usize] = (Row::First, c);
        }
        for (c, &x) in self.row2.iter().enumerate() {
            pos[x as usize] = (Row::Second, c);
        }
        pos
    }

    /// `{ i ≤ N−1 : i+1 sits in a lower row than i }`.
    pub fn descent_set(&self) -> BTreeSet<u32> {
        let pos = self.rows_by_entry();
        (1..self.size()).filter(|&i| pos[i].0 == Row::First && pos[i + 1].0 == Row::Second).map(|i| i as u32).collect()
    }

    pub fn maj(&self) -> u64 {
        self.descent_set().iter().map(|&i| i as u64).sum()
    }

    /// Sum of the `i ≤ N−1` for which `i+1` lies strictly to the right of `i`.
    pub fn charge(&self) -> u64 {
        let pos = self.rows_by_entry();
        (1..self.size()).filter(|&i| pos[i + 1].1 > pos[i].1).map(|i| i as u64).sum()
    }

    /// The embedding `T_N → T_{N+2}`: `N+1` goes to the first row, `N+2` to
    /// the second.
    pub fn embed(&self) -> TwoRowTableau {
        let n = self.size() as u32;
        let mut row1 = self.row1.clone();
        let mut row2 = self.row2.clone();
        row1.push(n + 1);
        row2.push(n + 2);
        let out = TwoRowTableau { row1, row2 };
        debug_assert!(TwoRowTableau::new(out.row1.clone(), out.row2.clone()).is_ok());
        out
    }

    /// Drops every entry larger than `cells`.
    pub fn truncate(&self, cells: usize) -> TwoRowTableau {
        let keep = |r: &[u32]| r.iter().copied().filter(|&x| x as usize <= cells).collect();
        TwoRowTableau { row1: keep(&self.row1), row2: keep(&self.row2) }
    }

    /// Inverse of [`embed`](Self::embed) when the two largest entries close
    /// out the rows in the embedded pattern.
    pub fn unembed(&self) -> Option<TwoRowTableau> {
        let n = self.size() as u32;
        if n < 2 || self.row2.last() != Some(&n) || self.row1.last() != Some(&(n - 1)) {
            return None;
        }
        let mut out = self.clone();
        out.row1.pop();
        out.row2.pop();
        Some(out)
    }
}

/// Number of standard tableaux of shape `(a, b)`, `a ≥ b`: the ballot number
/// `C(a+b, b) − C(a+b, b−1)`.
pub fn ballot_number(a: u64, b: u64) -> u64 {
    assert!(a >= b);
    let n = a + b;
    let c = |k: u64| -> u64 {
        let mut r: u128 = 1;
        for i in 0..k {
            r = r * (n - i) as u128 / (i + 1) as u128;
        }
        r as u64
    };
    if b == 0 {
        1
    } else {
        c(b) - c(b - 1)
    }
}

/// Two-row shapes `(N−b, b)` of size `N`, widest first.
pub fn two_row_shapes(n: usize) -> Vec<Partition> {
    (0..=n / 2).map(|b| Partition::from_unsorted(vec![(n - b) as u32, b as u32])).collect()
}

fn check_shape(n: usize, shape: &Partition) -> Result<(usize, usize)> {
    if shape.len() > 2 {
        return invalid(format!("shape {shape} has more than two rows"));
    }
    if shape.size() as usize != n {
        return invalid(format!("shape {shape} does not have {n} cells"));
    }
    Ok((shape.part(0) as usize, shape.part(1) as usize))
}

/// All standard tableaux with `n` cells and at most two rows, or only those of
/// `shape`. Shapes are visited widest first; within a shape the order is
/// lexicographic in the sequence of row choices (first row preferred).
pub fn enumerate_two_row_tableaux(n: usize, shape: Option<&Partition>) -> Result<Vec<TwoRowTableau>> {
    if n == 0 {
        return invalid("N must be positive");
    }
    if n > MAX_CELLS {
        return invalid(format!("N = {n} exceeds {MAX_CELLS}"));
    }
    let shapes = match shape {
        Some(s) => vec![check_shape(n, s)?],
        None => two_row_shapes(n).iter().map(|s| check_shape(n, s)).collect::<Result<Vec<_>>>()?,
    };
    let mut out = Vec::new();
    for (a, b) in shapes {
        fill(a, b, &mut TwoRowTableau::empty(), &mut out);
    }
    Ok(out)
}

fn fill(a: usize, b: usize, cur: &mut TwoRowTableau, out: &mut Vec<TwoRowTableau>) {
    let next = cur.size() as u32 + 1;
    if cur.row1.len() == a && cur.row2.len() == b {
        out.push(cur.clone());
        return;
    }
    if cur.row1.len() < a {
        cur.row1.push(next);
        fill(a, b, cur, out);
        cur.row1.pop();
    }
    if cur.row2.len() < b && cur.row2.len() < cur.row1.len() {
        cur.row2.push(next);
        fill(a, b, cur, out);
        cur.row2.pop();
    }
}

/// Two-row tableaux with `n` cells and `maj ≥ min_maj`, any shape. The search
/// prunes prefixes that cannot reach the bound, so near-alternating tableaux of
/// large size are cheap to list.
pub fn tableaux_with_min_maj(n: usize, min_maj: u64) -> Result<Vec<TwoRowTableau>> {
    if n > MAX_CELLS {
        return invalid(format!("N = {n} exceeds {MAX_CELLS}"));
    }
    // best[c] = largest sum of pairwise non-adjacent positions in [c, n-1]
    let mut best = vec![0u64; n + 2];
    for c in (1..n).rev() {
        best[c] = best[c + 1].max(c as u64 + best.get(c + 2).copied().unwrap_or(0));
    }
    let mut out = Vec::new();
    let mut cur = TwoRowTableau::empty();
    search_maj(n, min_maj, &best, &mut cur, None, 0, &mut out);
    Ok(out)
}

fn search_maj(
    n: usize,
    min_maj: u64,
    best: &[u64],
    cur: &mut TwoRowTableau,
    last: Option<Row>,
    maj: u64,
    out: &mut Vec<TwoRowTableau>,
) {
    let placed = cur.size();
    if placed == n {
        if maj >= min_maj {
            out.push(cur.clone());
        }
        return;
    }
    // a descent is still possible at positions placed..n-1
    let reach = if placed == 0 { best[1] } else { best[placed] };
    if maj + reach < min_maj {
        return;
    }
    let next = placed as u32 + 1;
    cur.row1.push(next);
    search_maj(n, min_maj, best, cur, Some(Row::First), maj, out);
    cur.row1.pop();
    if cur.row2.len() < cur.row1.len() {
        let gain = if last == Some(Row::First) { placed as u64 } else { 0 };
        cur.row2.push(next);
        search_maj(n, min_maj, best, cur, Some(Row::Second), maj + gain, out);
        cur.row2.pop();
    }
}

impl fmt::Display for TwoRowTableau {
    /// `[1 3 / 2 4]`, `[1 2]`, or `[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |r: &[u32]| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        if self.row2.is_empty() {
            write!(f, "[{}]", join(&self.row1))
        } else {
            write!(f, "[{} / {}]", join(&self.row1), join(&self.row2))
        }
    }
}

impl FromStr for TwoRowTableau {
    type Err = SerpError;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut rows = body.split('/');
        let parse_row = |r: Option<&str>| -> Result<Vec<u32>> {
            r.unwrap_or("")
                .split_whitespace()
                .map(|t| t.parse::<u32>().map_err(|e| SerpError::InvalidArgument(format!("bad entry {t:?}: {e}"))))
                .collect()
        };
        let row1 = parse_row(rows.next())?;
        let row2 = parse_row(rows.next())?;
        if rows.next().is_some() {
            return invalid(format!("{s:?} has more than two rows"));
        }
        TwoRowTableau::new(row1, row2)
    }
}
