//! Exact rational matrices, rank, and incrementally grown row spaces.

pub mod modular;

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::symfun::Rational;

pub use modular::ModSpan;

/// Matrices with more entries than this are stored sparsely.
pub const DENSE_LIMIT: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Storage {
    Dense(Vec<Rational>),
    Sparse(Vec<BTreeMap<usize, Rational>>),
}

/// An exact rational matrix.
#[derive(Clone, Debug)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    data: Storage,
}

impl RMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let data = if rows * cols <= DENSE_LIMIT {
            Storage::Dense(vec![Rational::zero(); rows * cols])
        } else {
            Storage::Sparse(vec![BTreeMap::new(); rows])
        };
        Self { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return invalid("rows of unequal length");
        }
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.data, Storage::Sparse(_))
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        match &self.data {
            Storage::Dense(v) => v[i * self.cols + j].clone(),
            Storage::Sparse(r) => r[i].get(&j).cloned().unwrap_or_else(Rational::zero),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        match &mut self.data {
            Storage::Dense(v) => v[i * self.cols + j] = value,
            Storage::Sparse(r) => {
                if value.is_zero() {
                    r[i].remove(&j);
                } else {
                    r[i].insert(j, value);
                }
            }
        }
    }

    /// Nonzero entries of row `i` as `(column, value)`.
    pub fn row_entries(&self, i: usize) -> Vec<(usize, Rational)> {
        match &self.data {
            Storage::Dense(v) => v[i * self.cols..(i + 1) * self.cols]
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (j, x.clone()))
                .collect(),
            Storage::Sparse(r) => r[i].iter().map(|(&j, x)| (j, x.clone())).collect(),
        }
    }

    pub fn row_vector(&self, i: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.cols];
        for (j, x) in self.row_entries(i) {
            out[j] = x;
        }
        out
    }

    pub fn transpose(&self) -> RMatrix {
        let mut t = RMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for (j, x) in self.row_entries(i) {
                t.set(j, i, x);
            }
        }
        t
    }

    /// `M · v`.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return invalid(format!("vector of length {} for {} columns", v.len(), self.cols));
        }
        Ok((0..self.rows)
            .map(|i| self.row_entries(i).into_iter().fold(Rational::zero(), |acc, (j, x)| acc + x * &v[j]))
            .collect())
    }

    pub fn mul(&self, other: &RMatrix) -> Result<RMatrix> {
        if self.cols != other.rows {
            return invalid(format!("shape mismatch {}x{} · {}x{}", self.rows, self.cols, other.rows, other.cols));
        }
        let mut out = RMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, a) in self.row_entries(i) {
                for (j, b) in other.row_entries(k) {
                    *acc.entry(j).or_insert_with(Rational::zero) += &a * b;
                }
            }
            for (j, x) in acc {
                out.set(i, j, x);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &RMatrix) -> Result<RMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return invalid("shape mismatch in subtraction");
        }
        let mut out = self.clone();
        for i in 0..other.rows {
            for (j, x) in other.row_entries(i) {
                let v = out.get(i, j) - x;
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> RMatrix {
        let mut out = RMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for (j, x) in self.row_entries(i) {
                out.set(i, j, x * c);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        (0..self.rows).all(|i| self.row_entries(i).is_empty())
    }

    /// The submatrix on the given rows and columns, in the given order.
    pub fn block_restrict(&self, row_idx: &[usize], col_idx: &[usize]) -> Result<RMatrix> {
        if let Some(&i) = row_idx.iter().find(|&&i| i >= self.rows) {
            return invalid(format!("row index {i} out of range for {} rows", self.rows));
        }
        if let Some(&j) = col_idx.iter().find(|&&j| j >= self.cols) {
            return invalid(format!("column index {j} out of range for {} columns", self.cols));
        }
        let mut out = RMatrix::zeros(row_idx.len(), col_idx.len());
        for (a, &i) in row_idx.iter().enumerate() {
            for (b, &j) in col_idx.iter().enumerate() {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.set(a, b, v);
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<SparseRow> = (0..self.rows).map(|i| self.row_entries(i).into_iter().collect()).collect();
        rank_of_rows(rows)
    }
}

impl PartialEq for RMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && (0..self.rows).all(|i| self.row_entries(i) == other.row_entries(i))
    }
}

impl Eq for RMatrix {}

type SparseRow = BTreeMap<usize, Rational>;

fn bit_cost(x: &Rational) -> u64 {
    x.numer().bits() + x.denom().bits()
}

/// Gaussian elimination column by column, pivoting on the entry with the
/// shortest numerator and denominator.
fn rank_of_rows(mut rows: Vec<SparseRow>) -> usize {
    rows.retain(|r| !r.is_empty());
    let mut rank = 0;
    while !rows.is_empty() {
        let col = rows.iter().filter_map(|r| r.keys().next().copied()).min().expect("nonempty rows");
        let pivot_idx = rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.get(&col).map(|x| (bit_cost(x), i)))
            .min()
            .map(|(_, i)| i)
            .expect("column has a nonzero");
        let pivot = rows.swap_remove(pivot_idx);
        let pv = pivot[&col].clone();
        rank += 1;
        for r in rows.iter_mut() {
            if let Some(x) = r.get(&col).cloned() {
                let f = x / &pv;
                axpy(r, &pivot, &-f);
            }
        }
        rows.retain(|r| !r.is_empty());
    }
    rank
}

/// `r += c · s` on sparse rows, dropping zeros.
fn axpy(r: &mut SparseRow, s: &SparseRow, c: &Rational) {
    for (&j, x) in s {
        let v = r.entry(j).or_insert_with(Rational::zero);
        *v += c * x;
        if v.is_zero() {
            r.remove(&j);
        }
    }
}

/// A subspace of `Q^n` held as a reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanBasis {
    ambient: usize,
    rows: Vec<SparseRow>,
    pivots: Vec<usize>,
}

impl SpanBasis {
    pub fn new(ambient: usize) -> Self {
        Self { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis rows as dense vectors, in pivot order.
    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.rows
            .iter()
            .map(|r| {
                let mut v = vec![Rational::zero(); self.ambient];
                for (&j, x) in r {
                    v[j] = x.clone();
                }
                v
            })
            .collect()
    }

    fn reduce(&self, mut v: SparseRow) -> SparseRow {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(x) = v.get(&p).cloned() {
                axpy(&mut v, row, &-x);
            }
        }
        v
    }

    fn to_sparse(&self, v: &[Rational]) -> Result<SparseRow> {
        if v.len() != self.ambient {
            return invalid(format!("vector of length {} in ambient dimension {}", v.len(), self.ambient));
        }
        Ok(v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect())
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.reduce(self.to_sparse(v)?).is_empty())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn extend(&mut self, v: &[Rational]) -> Result<bool> {
        let sparse = self.to_sparse(v)?;
        Ok(self.extend_sparse(sparse))
    }

    pub(crate) fn extend_sparse(&mut self, v: SparseRow) -> bool {
        let mut r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else { return false };
        let inv = lead.recip();
        for x in r.values_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if let Some(x) = row.get(&p).cloned() {
                axpy(row, &r, &-x);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    /// Functional form of [`SpanBasis::extend`].
    pub fn with(mut self, v: &[Rational]) -> Result<(SpanBasis, bool)> {
        let grew = self.extend(v)?;
        Ok((self, grew))
    }
}
