//! The fusion filtration on `(C^2)^{⊗N}` viewed as a module over the current
//! algebra `sl_2 ⊗ C[t]` with evaluation points `z_1, …, z_N`.
//!
//! Basis vectors are bitmasks (bit `i` set means factor `i` is raised). The
//! currents `e_j = Σ_i z_i^j E^(i)` move the popcount up by one, so the
//! filtration is computed one popcount block at a time.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Pow, Zero};

use crate::error::{invalid, Result};
use crate::linalg::modular::{mod_add, mod_mul, reduce_rational};
use crate::linalg::{ModSpan, RMatrix, SpanBasis};
use crate::partition::Partition;
use crate::qpoly::QPoly;
use crate::report::CheckSet;
use crate::symfun::{kostka_foulkes_standard, maj_qcharacter, rat, Rational};
use crate::tableau::ballot_number;

/// Largest tensor length accepted.
pub const MAX_FUSION_N: usize = 16;

/// Largest `N` for which the exact rational backend is the default.
pub const EXACT_DEFAULT_MAX_N: usize = 8;

/// Built-in choices of evaluation points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZChoice {
    /// `z_i = i`
    Consecutive,
    /// `z_i = i + N`
    Shifted,
}

impl ZChoice {
    pub fn points(self, n: usize) -> Vec<Rational> {
        let offset = match self {
            ZChoice::Consecutive => 0,
            ZChoice::Shifted => n as i64,
        };
        (1..=n as i64).map(|i| rat(i + offset)).collect()
    }
}

/// Arithmetic used for the span computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    Exact,
    /// Arithmetic modulo `2^61 − 1`.
    Modular,
}

impl Backend {
    pub fn auto(n: usize) -> Self {
        if n <= EXACT_DEFAULT_MAX_N {
            Backend::Exact
        } else {
            Backend::Modular
        }
    }
}

/// The tensor product of `N` two-dimensional evaluation modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalModule {
    n: usize,
    z: Vec<Rational>,
}

impl EvalModule {
    /// `z` defaults to `1, …, N`.
    pub fn build(n: usize, z: Option<Vec<Rational>>) -> Result<Self> {
        if n < 2 || !n.is_multiple_of(2) {
            return invalid(format!("tensor length must be even and at least 2, got {n}"));
        }
        if n > MAX_FUSION_N {
            return invalid(format!("tensor length {n} exceeds {MAX_FUSION_N}"));
        }
        let z = z.unwrap_or_else(|| ZChoice::Consecutive.points(n));
        if z.len() != n {
            return invalid(format!("{} evaluation points for N = {n}", z.len()));
        }
        let distinct: BTreeSet<&Rational> = z.iter().collect();
        if distinct.len() != n {
            return invalid("evaluation points must be pairwise distinct");
        }
        Ok(Self { n, z })
    }

    pub fn with_choice(n: usize, choice: ZChoice) -> Result<Self> {
        Self::build(n, Some(choice.points(n)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn z(&self) -> &[Rational] {
        &self.z
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    /// Matrix of `Σ_i c_i X^(i)` on the full space, where `X` is the raising
    /// (`up`) or lowering operator of a single factor.
    fn local_sum(&self, coeffs: &[Rational], up: bool) -> RMatrix {
        let mut m = RMatrix::zeros(self.dim(), self.dim());
        for mask in 0..self.dim() {
            for (i, c) in coeffs.iter().enumerate() {
                let bit = 1 << i;
                if (mask & bit == 0) == up && !c.is_zero() {
                    m.set(mask ^ bit, mask, c.clone());
                }
            }
        }
        m
    }

    /// `e_j = Σ_i z_i^j E^(i)`.
    pub fn e_matrix(&self, j: u32) -> RMatrix {
        let coeffs: Vec<Rational> = self.z.iter().map(|z| Pow::pow(z, j)).collect();
        self.local_sum(&coeffs, true)
    }

    /// Global `e = e_0`.
    pub fn sl2_e(&self) -> RMatrix {
        self.e_matrix(0)
    }

    /// Global `f = Σ_i F^(i)`.
    pub fn sl2_f(&self) -> RMatrix {
        self.local_sum(&vec![Rational::one(); self.n], false)
    }

    /// Global `h`, diagonal with entry `2·popcount − N`.
    pub fn sl2_h(&self) -> RMatrix {
        let mut m = RMatrix::zeros(self.dim(), self.dim());
        for mask in 0..self.dim() {
            let w = mask.count_ones() as i64;
            m.set(mask, mask, rat(2 * w - self.n as i64));
        }
        m
    }
}

/// Masks of popcount `w` in increasing order.
fn block_masks(n: usize, w: usize) -> Vec<u32> {
    (0..1u32 << n).filter(|m| m.count_ones() as usize == w).collect()
}

/// Scalars and spans for one backend.
trait Lane {
    type S: Clone;
    type Span;
    fn zero(&self) -> Self::S;
    fn is_zero(x: &Self::S) -> bool;
    fn add_mul(acc: &mut Self::S, a: &Self::S, b: &Self::S);
    fn new_span(&self, ambient: usize) -> Self::Span;
    fn extend(span: &mut Self::Span, v: Vec<Self::S>) -> bool;
    fn dim(span: &Self::Span) -> usize;
    fn lift(&self, x: &Rational) -> Self::S;
}

struct ExactLane;

impl Lane for ExactLane {
    type S = Rational;
    type Span = SpanBasis;
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn is_zero(x: &Rational) -> bool {
        x.is_zero()
    }
    fn add_mul(acc: &mut Rational, a: &Rational, b: &Rational) {
        *acc += a * b;
    }
    fn new_span(&self, ambient: usize) -> SpanBasis {
        SpanBasis::new(ambient)
    }
    fn extend(span: &mut SpanBasis, v: Vec<Rational>) -> bool {
        span.extend(&v).expect("vector sized to block")
    }
    fn dim(span: &SpanBasis) -> usize {
        span.dim()
    }
    fn lift(&self, x: &Rational) -> Rational {
        x.clone()
    }
}

struct ModLane;

impl Lane for ModLane {
    type S = u64;
    type Span = ModSpan;
    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(x: &u64) -> bool {
        *x == 0
    }
    fn add_mul(acc: &mut u64, a: &u64, b: &u64) {
        *acc = mod_add(*acc, mod_mul(*a, *b));
    }
    fn new_span(&self, ambient: usize) -> ModSpan {
        ModSpan::new(ambient)
    }
    fn extend(span: &mut ModSpan, v: Vec<u64>) -> bool {
        span.extend(v).expect("vector sized to block")
    }
    fn dim(span: &ModSpan) -> usize {
        span.dim()
    }
    fn lift(&self, x: &Rational) -> u64 {
        reduce_rational(x).expect("evaluation points have small denominators")
    }
}

/// Cumulative dimensions `dim V^{(≤m)} ∩ (popcount w)` for `m = 0, 1, …` up to
/// the first grade where the block is filled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockFiltration {
    pub weight: usize,
    pub dims: Vec<usize>,
}

impl BlockFiltration {
    /// `dim gr_m` of this block.
    pub fn graded(&self, m: usize) -> usize {
        let at = |i: usize| self.dims.get(i).copied().unwrap_or(*self.dims.last().unwrap_or(&0));
        if m == 0 {
            at(0)
        } else {
            at(m) - at(m - 1)
        }
    }

    pub fn top_grade(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }
}

/// Computes blocks `0..=w_max`. Each block's basis is chosen among vectors
/// `e_j b` with `b` from the previous block's basis, taken in increasing
/// grade `g(b) + j`, so every basis is adapted to the filtration.
fn filtration_blocks<L: Lane>(lane: &L, m: &EvalModule, w_max: usize) -> Vec<BlockFiltration> {
    let n = m.n;
    // powers[j][i] = z_i^j
    let powers: Vec<Vec<L::S>> =
        (0..n as u32).map(|j| m.z.iter().map(|z| lane.lift(&Pow::pow(z, j))).collect()).collect();
    let mut out = vec![BlockFiltration { weight: 0, dims: vec![1] }];
    let mut prev_masks = block_masks(n, 0);
    let mut prev_basis: Vec<(Vec<L::S>, usize)> = vec![(vec![lane.lift(&Rational::one())], 0)];
    for w in 1..=w_max.min(n) {
        let masks = block_masks(n, w);
        let index: BTreeMap<u32, usize> = masks.iter().enumerate().map(|(i, &mk)| (mk, i)).collect();
        let full = masks.len();
        let mut candidates: Vec<(usize, usize, usize)> = Vec::new();
        for (bi, (_, g)) in prev_basis.iter().enumerate() {
            for j in 0..n {
                candidates.push((g + j, bi, j));
            }
        }
        candidates.sort_unstable();
        let mut span = lane.new_span(full);
        let mut basis: Vec<(Vec<L::S>, usize)> = Vec::new();
        let mut dims = Vec::new();
        let mut next = 0;
        let mut grade = 0;
        while L::dim(&span) < full {
            while next < candidates.len() && candidates[next].0 == grade {
                let (_, bi, j) = candidates[next];
                next += 1;
                let src = &prev_basis[bi].0;
                let mut v = vec![lane.zero(); full];
                for (si, c) in src.iter().enumerate() {
                    if L::is_zero(c) {
                        continue;
                    }
                    let mask = prev_masks[si];
                    for (i, zp) in powers[j].iter().enumerate() {
                        if mask & (1 << i) == 0 {
                            L::add_mul(&mut v[index[&(mask | 1 << i)]], c, zp);
                        }
                    }
                }
                if L::extend(&mut span, v.clone()) {
                    basis.push((v, grade));
                    if L::dim(&span) == full {
                        break;
                    }
                }
            }
            dims.push(L::dim(&span));
            assert!(next < candidates.len() || L::dim(&span) == full, "block {w} never filled");
            grade += 1;
        }
        out.push(BlockFiltration { weight: w, dims });
        prev_masks = masks;
        prev_basis = basis;
    }
    out
}

/// Block `w` as the image of symmetric polynomials in `w` variables evaluated
/// at the `w`-subsets of the points: `e_{j_1} ⋯ e_{j_w} v_0` has coordinate
/// `m_{(j)}(z_S)` at the subset `S`, so `V^{(≤m)}` in this block is the image
/// of polynomials of degree `≤ m`.
///
/// Candidates are the monomials `e_1^{a_1} ⋯ e_w^{a_w}` in the elementary
/// symmetric polynomials, taken by weighted degree and then lexicographically.
/// A monomial that is dependent on earlier ones is the leading term of an
/// element of the associated graded ideal, so its multiples are skipped.
fn evaluation_blocks<L: Lane>(lane: &L, m: &EvalModule, w_max: usize) -> Vec<BlockFiltration> {
    let n = m.n;
    let z: Vec<L::S> = m.z.iter().map(|x| lane.lift(x)).collect();
    let one = lane.lift(&Rational::one());
    let mut out = vec![BlockFiltration { weight: 0, dims: vec![1] }];
    for w in 1..=w_max.min(n) {
        let masks = block_masks(n, w);
        let full = masks.len();
        // elem[s][k] = e_k(z_S)
        let elem: Vec<Vec<L::S>> = masks
            .iter()
            .map(|&mask| {
                let mut e = vec![lane.zero(); w + 1];
                e[0] = one.clone();
                let mut used = 0;
                for (i, zi) in z.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        used += 1;
                        for k in (1..=used).rev() {
                            let prev = e[k - 1].clone();
                            L::add_mul(&mut e[k], &prev, zi);
                        }
                    }
                }
                e
            })
            .collect();
        let mut span = lane.new_span(full);
        let mut dependent: Vec<Vec<u32>> = Vec::new();
        let mut dims = Vec::new();
        let mut degree = 0;
        while L::dim(&span) < full {
            for a in weighted_exponents(degree, w) {
                if dependent.iter().any(|d| d.iter().zip(&a).all(|(x, y)| x <= y)) {
                    continue;
                }
                let v: Vec<L::S> = elem
                    .iter()
                    .map(|e| {
                        let mut acc = one.clone();
                        for (k, &ak) in a.iter().enumerate() {
                            for _ in 0..ak {
                                let mut next = lane.zero();
                                L::add_mul(&mut next, &acc, &e[k + 1]);
                                acc = next;
                            }
                        }
                        acc
                    })
                    .collect();
                if !L::extend(&mut span, v) {
                    dependent.push(a);
                } else if L::dim(&span) == full {
                    break;
                }
            }
            dims.push(L::dim(&span));
            degree += 1;
        }
        out.push(BlockFiltration { weight: w, dims });
    }
    out
}

/// Exponent vectors `a ∈ N^w` with `Σ_k k·a_k = d`, lexicographically
/// increasing.
fn weighted_exponents(d: usize, w: usize) -> Vec<Vec<u32>> {
    fn go(k: usize, w: usize, rest: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == w {
            if rest.is_multiple_of(w) {
                cur.push((rest / w) as u32);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for a in 0..=rest / k {
            cur.push(a as u32);
            go(k + 1, w, rest - a * k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, w, d, &mut Vec::new(), &mut out);
    out
}

/// How the filtration is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Apply the currents `e_j` to a filtration-adapted basis of the previous
    /// block.
    CurrentAction,
    /// Evaluate symmetric polynomials at subsets of the points.
    SymmetricEvaluation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Strategy {
    pub method: Method,
    pub backend: Backend,
}

impl Strategy {
    pub const EXACT: Strategy = Strategy { method: Method::CurrentAction, backend: Backend::Exact };
    pub const FAST: Strategy = Strategy { method: Method::SymmetricEvaluation, backend: Backend::Modular };

    /// Exact current action up to [`EXACT_DEFAULT_MAX_N`], modular evaluation
    /// above.
    pub fn auto(n: usize) -> Self {
        match Backend::auto(n) {
            Backend::Exact => Self::EXACT,
            Backend::Modular => Self::FAST,
        }
    }
}

/// Filtration blocks for popcounts `0..=w_max`.
pub fn filtration_by_block(m: &EvalModule, w_max: usize, strategy: Strategy) -> Vec<BlockFiltration> {
    match (strategy.method, strategy.backend) {
        (Method::CurrentAction, Backend::Exact) => filtration_blocks(&ExactLane, m, w_max),
        (Method::CurrentAction, Backend::Modular) => filtration_blocks(&ModLane, m, w_max),
        (Method::SymmetricEvaluation, Backend::Exact) => evaluation_blocks(&ExactLane, m, w_max),
        (Method::SymmetricEvaluation, Backend::Modular) => evaluation_blocks(&ModLane, m, w_max),
    }
}

/// `dim V^{(≤m)}` for `m = 0, …, top`; the last entry is `2^N`.
pub fn filtration_dims(m: &EvalModule) -> Vec<usize> {
    filtration_dims_with(m, Strategy::auto(m.n))
}

pub fn filtration_dims_with(m: &EvalModule, strategy: Strategy) -> Vec<usize> {
    let blocks = filtration_by_block(m, m.n, strategy);
    let top = blocks.iter().map(BlockFiltration::top_grade).max().unwrap_or(0);
    (0..=top).map(|g| blocks.iter().map(|b| b.dims[g.min(b.top_grade())]).sum()).collect()
}

/// The same filtration computed on the full space without splitting into
/// blocks: `V^{(≤m)}` is the `e_0`-closure of
/// `V^{(≤m−1)} + Σ_{j≥1} e_j V^{(≤m−j)}`.
pub fn filtration_dims_global(m: &EvalModule) -> Vec<usize> {
    let dim = m.dim();
    let e: Vec<RMatrix> = (0..m.n as u32).map(|j| m.e_matrix(j)).collect();
    let mut vacuum = vec![Rational::zero(); dim];
    vacuum[0] = Rational::one();
    let close = |span: &mut SpanBasis, mut fresh: Vec<Vec<Rational>>| {
        while let Some(v) = fresh.pop() {
            let image = e[0].apply(&v).expect("square matrix");
            if span.extend(&image).expect("ambient size") {
                fresh.push(image);
            }
        }
    };
    let mut levels: Vec<SpanBasis> = Vec::new();
    let mut first = SpanBasis::new(dim);
    first.extend(&vacuum).expect("ambient size");
    close(&mut first, vec![vacuum]);
    levels.push(first);
    while levels.last().expect("nonempty").dim() < dim {
        let g = levels.len();
        let mut span = levels[g - 1].clone();
        let mut fresh = Vec::new();
        for j in 1..=g.min(m.n - 1) {
            for v in levels[g - j].basis() {
                let image = e[j].apply(&v).expect("square matrix");
                if span.extend(&image).expect("ambient size") {
                    fresh.push(image);
                }
            }
        }
        close(&mut span, fresh);
        levels.push(span);
    }
    levels.iter().map(SpanBasis::dim).collect()
}

/// `k ↦ ch_q M_k`, the graded multiplicity of the spin-`k` irreducible.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedMultiplicities {
    pub by_spin: BTreeMap<u32, QPoly>,
}

impl GradedMultiplicities {
    pub fn get(&self, k: u32) -> QPoly {
        self.by_spin.get(&k).cloned().unwrap_or_default()
    }

    /// `Σ_k (2k+1) ch_q M_k(1)`.
    pub fn total_dimension(&self) -> i64 {
        self.by_spin.iter().map(|(&k, p)| (2 * k as i64 + 1) * p.eval_at_one()).sum()
    }
}

pub fn graded_multiplicities(m: &EvalModule) -> GradedMultiplicities {
    graded_multiplicities_with(m, Strategy::auto(m.n))
}

/// `dim M_k[i] = dim gr_i(popcount n−k) − dim gr_i(popcount n−k−1)` with
/// `N = 2n`; the graded pieces are `sl_2`-modules so popcounts `≤ n` suffice.
pub fn graded_multiplicities_with(m: &EvalModule, strategy: Strategy) -> GradedMultiplicities {
    let half = m.n / 2;
    let blocks = filtration_by_block(m, half, strategy);
    let top = blocks.iter().map(BlockFiltration::top_grade).max().unwrap_or(0);
    let mut by_spin = BTreeMap::new();
    for k in 0..=half {
        let upper = &blocks[half - k];
        let mut poly = QPoly::zero();
        for i in 0..=top {
            let lower = if k == half { 0 } else { blocks[half - k - 1].graded(i) };
            poly.add_term(i as i64, upper.graded(i) as i64 - lower as i64);
        }
        by_spin.insert(k as u32, poly);
    }
    GradedMultiplicities { by_spin }
}

/// Highest grade with a nonzero piece.
pub fn top_grade(m: &EvalModule) -> usize {
    filtration_dims(m).len() - 1
}

/// The two-row shape `(n+k, n−k)`.
pub fn spin_shape(n: u32, k: u32) -> Partition {
    Partition::from_unsorted(vec![n + k, n - k])
}

/// Compares, for every spin `k`, the fusion character with
/// `q^{N(N−1)/2} K_{(n+k,n−k),1^N}(1/q)` and with the maj generating
/// polynomial, and checks the total dimension `2^N`.
pub fn verify_kedem(n_cells: usize) -> Result<CheckSet> {
    verify_kedem_with(n_cells, ZChoice::Consecutive, Strategy::auto(n_cells))
}

pub fn verify_kedem_with(n_cells: usize, z: ZChoice, strategy: Strategy) -> Result<CheckSet> {
    let module = EvalModule::with_choice(n_cells, z)?;
    let mults = graded_multiplicities_with(&module, strategy);
    let half = (n_cells / 2) as u32;
    let shift = (n_cells * (n_cells - 1) / 2) as i64;
    let mut checks = CheckSet::new();
    for k in 0..=half {
        let shape = spin_shape(half, k);
        let fusion = mults.get(k);
        let kf = kostka_foulkes_standard(&shape)?.invert_variable().shift(shift);
        let maj = maj_qcharacter(&shape)?;
        checks.equal(format!("N={n_cells} k={k} fusion = q^{shift} K(1/q)"), &fusion, &kf);
        checks.equal(format!("N={n_cells} k={k} fusion = maj character"), &fusion, &maj);
    }
    checks.equal(format!("N={n_cells} sum (2k+1) ch M_k(1) = 2^N"), &mults.total_dimension(), &(1i64 << n_cells));
    Ok(checks)
}

/// `Σ_k (2k+1) · #SYT(n+k, n−k)` for `N = 2n` (or the odd analogue).
pub fn spin_dimension_sum(n_cells: u32) -> u64 {
    let mut total = 0u64;
    let mut b = n_cells;
    while 2 * b >= n_cells {
        let a = n_cells - b;
        total += (b - a + 1) as u64 * ballot_number(b as u64, a as u64);
        if b == 0 {
            break;
        }
        b -= 1;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(exps: &[i64]) -> QPoly {
        QPoly::from_exponents(exps.iter().copied())
    }

    #[test]
    fn build_validation() {
        let m = EvalModule::build(2, Some(vec![rat(1), rat(2)])).unwrap();
        let e0 = m.e_matrix(0);
        let e1 = m.e_matrix(1);
        // basis 0b00, 0b01, 0b10, 0b11
        assert_eq!(e0.get(1, 0), rat(1));
        assert_eq!(e0.get(2, 0), rat(1));
        assert_eq!(e1.get(1, 0), rat(1));
        assert_eq!(e1.get(2, 0), rat(2));
        assert_eq!(e1.get(3, 1), rat(2));
        assert!(EvalModule::build(2, Some(vec![rat(1), rat(1)])).is_err());
        assert!(EvalModule::build(3, None).is_err());
        assert_eq!(EvalModule::build(4, None).unwrap().z(), &ZChoice::Consecutive.points(4)[..]);
        assert_eq!(EvalModule::build(4, None).unwrap().dim(), 16);
    }

    #[test]
    fn sl2_relations() {
        let m = EvalModule::build(4, None).unwrap();
        let (e, f, h) = (m.sl2_e(), m.sl2_f(), m.sl2_h());
        let ef = e.mul(&f).unwrap().sub(&f.mul(&e).unwrap()).unwrap();
        assert_eq!(ef, h);
        for j in 0..4 {
            let ej = m.e_matrix(j);
            let br = h.mul(&ej).unwrap().sub(&ej.mul(&h).unwrap()).unwrap();
            assert_eq!(br, ej.scale(&rat(2)));
        }
    }

    #[test]
    fn filtration_small() {
        let m = EvalModule::build(2, None).unwrap();
        assert_eq!(filtration_dims(&m), vec![3, 4]);
        let other = EvalModule::build(2, Some(vec![rat(5), rat(7)])).unwrap();
        assert_eq!(filtration_dims(&other), vec![3, 4]);
        let m4 = EvalModule::build(4, None).unwrap();
        let d = filtration_dims(&m4);
        assert_eq!(*d.last().unwrap(), 16);
        assert_eq!(d.len() - 1, 4);
    }

    #[test]
    fn multiplicities_small() {
        let g2 = graded_multiplicities(&EvalModule::build(2, None).unwrap());
        assert_eq!(g2.get(0), qp(&[1]));
        assert_eq!(g2.get(1), qp(&[0]));
        let g4 = graded_multiplicities(&EvalModule::build(4, None).unwrap());
        assert_eq!(g4.get(0), qp(&[2, 4]));
        assert_eq!(g4.get(1), qp(&[1, 2, 3]));
        assert_eq!(g4.get(2), qp(&[0]));
        assert_eq!(g4.total_dimension(), 16);
    }

    #[test]
    fn kedem_small() {
        for n in [2, 4, 6] {
            let c = verify_kedem(n).unwrap();
            assert!(c.all_passed(), "{:?}", c.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn global_matches_blocks() {
        for n in [2, 4] {
            let m = EvalModule::build(n, None).unwrap();
            assert_eq!(filtration_dims_global(&m), filtration_dims(&m));
        }
    }

    #[test]
    fn all_strategies_agree_small() {
        for n in [2, 4, 6] {
            let m = EvalModule::build(n, None).unwrap();
            let reference = filtration_by_block(&m, n, Strategy::EXACT);
            for method in [Method::CurrentAction, Method::SymmetricEvaluation] {
                for backend in [Backend::Exact, Backend::Modular] {
                    assert_eq!(
                        filtration_by_block(&m, n, Strategy { method, backend }),
                        reference,
                        "{n} {method:?} {backend:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn weighted_exponent_lists() {
        assert_eq!(weighted_exponents(3, 2), vec![vec![1, 1], vec![3, 0]]);
        assert_eq!(weighted_exponents(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(weighted_exponents(4, 1), vec![vec![4]]);
    }

    #[test]
    fn dimension_identity() {
        for n in 1..=16 {
            assert_eq!(spin_dimension_sum(n), 1 << n, "N={n}");
        }
    }
}
