//! The Heisenberg modes `h_n` on `⊕_c Λ·Ω_c` and the free-boson Virasoro
//! modes `L_n = ¼ Σ_{a+b=n} :h_a h_b:`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use serde_json::{json, Value};

use crate::error::{invalid, Result};
use crate::partition::Partition;
use crate::report::{Check, CheckSet, ToReport};
use crate::serpentine::SerpentineTableau;
use crate::symfun::{rat, ratio, schur_to_p, Rational, SymFun, Workspace};

/// `Σ_c f_c Ω_c` with `f_c ∈ Λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FockState {
    terms: BTreeMap<i64, SymFun>,
}

impl FockState {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `f · Ω_charge`.
    pub fn new(charge: i64, f: SymFun) -> Self {
        let mut s = Self::zero();
        s.add_component(charge, f);
        s
    }

    /// The vacuum `Ω_charge`.
    pub fn vacuum(charge: i64) -> Self {
        Self::new(charge, SymFun::one())
    }

    pub fn add_component(&mut self, charge: i64, f: SymFun) {
        if f.is_zero() {
            return;
        }
        let slot = self.terms.entry(charge).or_default();
        *slot = &*slot + &f;
        if slot.is_zero() {
            self.terms.remove(&charge);
        }
    }

    pub fn component(&self, charge: i64) -> SymFun {
        self.terms.get(&charge).cloned().unwrap_or_default()
    }

    pub fn components(&self) -> impl Iterator<Item = (i64, &SymFun)> {
        self.terms.iter().map(|(&c, f)| (c, f))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> FockState {
        self.map(|_, f| f.scale(c))
    }

    fn map(&self, op: impl Fn(i64, &SymFun) -> SymFun) -> FockState {
        let mut out = FockState::zero();
        for (&c, f) in &self.terms {
            out.add_component(c, op(c, f));
        }
        out
    }

    fn try_map(&self, op: impl Fn(i64, &SymFun) -> Result<SymFun>) -> Result<FockState> {
        let mut out = FockState::zero();
        for (&c, f) in &self.terms {
            out.add_component(c, op(c, f)?);
        }
        Ok(out)
    }
}

impl Add for &FockState {
    type Output = FockState;
    fn add(self, rhs: &FockState) -> FockState {
        let mut out = self.clone();
        for (&c, f) in &rhs.terms {
            out.add_component(c, f.clone());
        }
        out
    }
}

impl Sub for &FockState {
    type Output = FockState;
    fn sub(self, rhs: &FockState) -> FockState {
        let mut out = self.clone();
        for (&c, f) in &rhs.terms {
            out.add_component(c, -f);
        }
        out
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (c, g)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({g})·Ω[{c}]")?;
        }
        Ok(())
    }
}

impl ToReport for FockState {
    /// `[charge, symfun]` pairs in charge order.
    fn to_report(&self) -> Value {
        Value::Array(self.terms.iter().map(|(c, f)| json!([c, f.to_report()])).collect())
    }
}

/// `h_n` on a single component: `2n ∂/∂p_n` for `n > 0`, `p_{−n}` for `n < 0`,
/// multiplication by the charge for `n = 0`.
fn h_on(n: i64, charge: i64, f: &SymFun) -> SymFun {
    match n {
        0 => f.scale(&rat(charge)),
        n if n > 0 => f.d_dp(n as u32).scale(&rat(2 * n)),
        n => f.times_p((-n) as u32),
    }
}

/// `h_n s`. The zero mode acts by the charge, as [`charge_apply`] does.
pub fn h_apply(n: i64, s: &FockState) -> FockState {
    s.map(|c, f| h_on(n, c, f))
}

/// `h_0 s`: each charge-`c` component multiplied by `c`.
pub fn charge_apply(s: &FockState) -> FockState {
    h_apply(0, s)
}

/// `L_n` on a component of charge `c`:
///
/// * `n ≠ 0`: `¼ Σ_{a+b=n, ab>0} h_a h_b + ½ c h_n + ½ Σ_{j≥1} h_{−j} h_{n+j}`
/// * `n = 0`: `¼ c² + ½ Σ_{j≥1} h_{−j} h_j`
///
/// Annihilation modes above the degree of `f` vanish, so each sum is finite.
fn l_on(n: i64, charge: i64, f: &SymFun) -> SymFun {
    let deg = f.max_degree().unwrap_or(0) as i64;
    let mut acc = SymFun::zero();
    let quarter = ratio(1, 4);
    let half = ratio(1, 2);
    if n == 0 {
        acc = &acc + &f.scale(&(rat(charge * charge) * &quarter));
        let mut sum = SymFun::zero();
        for j in 1..=deg {
            sum = &sum + &h_on(-j, charge, &h_on(j, charge, f));
        }
        return &acc + &sum.scale(&half);
    }
    // same-sign pairs
    let mut same = SymFun::zero();
    if n > 0 {
        for a in 1..n {
            same = &same + &h_on(a, charge, &h_on(n - a, charge, f));
        }
    } else {
        for a in (n + 1)..0 {
            same = &same + &h_on(a, charge, &h_on(n - a, charge, f));
        }
    }
    acc = &acc + &same.scale(&quarter);
    acc = &acc + &h_on(n, charge, f).scale(&(rat(charge) * &half));
    let mut mixed = SymFun::zero();
    for j in 1.max(1 - n)..=(deg - n) {
        mixed = &mixed + &h_on(-j, charge, &h_on(n + j, charge, f));
    }
    &acc + &mixed.scale(&half)
}

/// `L_n s`, with the result degree checked against the workspace.
pub fn l_apply(n: i64, s: &FockState, ws: &Workspace) -> Result<FockState> {
    if n.unsigned_abs() > ws.degree_bound as u64 {
        return invalid(format!("|n| = {} exceeds the degree bound {}", n.abs(), ws.degree_bound));
    }
    s.try_map(|c, f| ws.admit(l_on(n, c, f)))
}

/// `d = h_0²/2 + Σ_{n≥1} h_{−n} h_n`.
pub fn d_apply(s: &FockState) -> FockState {
    s.map(|c, f| {
        let deg = f.max_degree().unwrap_or(0) as i64;
        let mut acc = f.scale(&ratio(c * c, 2));
        for j in 1..=deg {
            acc = &acc + &h_on(-j, c, &h_on(j, c, f));
        }
        acc
    })
}

/// The `L_0` eigenvalue attached to a serpentine tableau, `r(τ)`.
pub fn l0_on_serpentine(tau: &SerpentineTableau) -> i64 {
    tau.stable_major_index()
}

/// Test states `p_λ Ω_c` for `|λ| ≤ max_degree`.
fn test_states(max_degree: u32, charges: &[i64]) -> Vec<(i64, Partition, FockState)> {
    let mut out = Vec::new();
    for &c in charges {
        for lambda in Partition::up_to(max_degree) {
            out.push((c, lambda.clone(), FockState::new(c, SymFun::p(lambda))));
        }
    }
    out
}

/// Runs `f` on every test state; one check summarising the first mismatch.
fn sweep(
    name: String,
    states: &[(i64, Partition, FockState)],
    mut f: impl FnMut(&FockState) -> Result<(FockState, FockState)>,
) -> Result<Check> {
    for (c, lambda, s) in states {
        let (lhs, rhs) = f(s)?;
        if lhs != rhs {
            return Ok(Check::verdict(name, false, lhs, rhs).with_witness(json!([c, lambda.to_string()])));
        }
    }
    Ok(Check::verdict(name, true, states.len(), states.len()))
}

pub const TEST_CHARGES: [i64; 3] = [-2, 0, 2];

/// `[L_m, L_n] = (m−n) L_{m+n} + δ_{m+n,0} (m³−m)/12` on `p_λ Ω_c`,
/// `|λ| ≤ max_degree`, `c ∈ {0, ±2}`.
pub fn verify_virasoro_bracket(m: i64, n: i64, max_degree: u32) -> Result<CheckSet> {
    let ws = Workspace::strict(max_degree + m.unsigned_abs() as u32 + n.unsigned_abs() as u32);
    let states = test_states(max_degree, &TEST_CHARGES);
    let central = if m + n == 0 { ratio(m * m * m - m, 12) } else { rat(0) };
    let check = sweep(format!("[L_{m}, L_{n}] = ({m}-{n}) L_{} + central", m + n), &states, |s| {
        let lhs = &l_apply(m, &l_apply(n, s, &ws)?, &ws)? - &l_apply(n, &l_apply(m, s, &ws)?, &ws)?;
        let rhs = &l_apply(m + n, s, &ws)?.scale(&rat(m - n)) + &s.scale(&central);
        Ok((lhs, rhs))
    })?;
    let mut set = CheckSet::new();
    set.push(check);
    Ok(set)
}

/// The bracket for all `|m|, |n| ≤ max_mode`.
pub fn verify_virasoro_algebra(max_mode: i64, max_degree: u32) -> Result<CheckSet> {
    let mut set = CheckSet::new();
    for m in -max_mode..=max_mode {
        for n in -max_mode..=max_mode {
            set.extend(verify_virasoro_bracket(m, n, max_degree)?);
        }
    }
    Ok(set)
}

/// `[h_m, h_{−m}] = 2m` on `p_λ Ω_0`.
pub fn verify_heisenberg(max_mode: i64, max_degree: u32) -> Result<CheckSet> {
    let states = test_states(max_degree, &[0]);
    let mut set = CheckSet::new();
    for m in 1..=max_mode {
        set.push(sweep(format!("[h_{m}, h_-{m}] = {}", 2 * m), &states, |s| {
            let lhs = &h_apply(m, &h_apply(-m, s)) - &h_apply(-m, &h_apply(m, s));
            Ok((lhs, s.scale(&rat(2 * m))))
        })?);
    }
    Ok(set)
}

/// `L_0 p_λ = |λ| p_λ` on charge 0.
pub fn verify_l0_degree(max_degree: u32) -> Result<CheckSet> {
    let ws = Workspace::strict(max_degree);
    let states = test_states(max_degree, &[0]);
    let mut set = CheckSet::new();
    set.push(sweep("L_0 = degree operator".to_string(), &states, |s| {
        let deg = s.component(0).max_degree().unwrap_or(0);
        Ok((l_apply(0, s, &ws)?, s.scale(&rat(deg as i64))))
    })?);
    Ok(set)
}

/// `d = 2 L_0` on charges `0, ±2`.
pub fn verify_d_operator(max_degree: u32) -> Result<CheckSet> {
    let ws = Workspace::strict(max_degree);
    let states = test_states(max_degree, &TEST_CHARGES);
    let mut set = CheckSet::new();
    set.push(sweep("d = 2 L_0".to_string(), &states, |s| Ok((d_apply(s), l_apply(0, s, &ws)?.scale(&rat(2)))))?);
    Ok(set)
}

/// `L_n s_{(k^k)} = 0` for `1 ≤ n ≤ n_max`, `L_0 s_{(k^k)} = k² s_{(k^k)}`,
/// and `k² = r(τ_k)`.
pub fn verify_singular_vector(k: u32, n_max: i64, ws: &Workspace) -> Result<CheckSet> {
    ws.check_degree(k * k)?;
    let xi = FockState::new(0, schur_to_p(&Partition::rectangle(k as usize, k)));
    let mut set = CheckSet::new();
    for n in 1..=n_max {
        set.equal(format!("L_{n} s_({k}^{k}) = 0"), &l_apply(n, &xi, ws)?, &FockState::zero());
    }
    let kk = (k * k) as i64;
    set.equal(format!("L_0 s_({k}^{k}) = {kk} s_({k}^{k})"), &l_apply(0, &xi, ws)?, &xi.scale(&rat(kk)));
    set.equal(format!("{kk} = r(tau_{k})"), &kk, &l0_on_serpentine(&SerpentineTableau::principal(k)));
    Ok(set)
}
