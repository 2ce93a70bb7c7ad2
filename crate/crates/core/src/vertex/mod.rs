//! Homogeneous vertex operators on `⊕_c Λ·Ω_c`: the series `Γ_±`, the modes of
//! `E(z)`, and a constant-term formula for products of those modes that does
//! not go through the operators at all.

mod gamma;
mod laurent;
mod oracle;

use num_traits::{One, Signed};

pub use gamma::{
    gamma_minus_series, gamma_plus_by_substitution, gamma_plus_mode, verify_cauchy, verify_gamma_commutation,
};
pub use laurent::{alternant, permutations, vandermonde_determinant, vandermonde_product, MultiLaurent};
pub use oracle::{
    e_monomial_oracle, inverse_padded_factorial, multisets, padded_multiplicity_factorial, schur_constant_term,
    verify_ebasis, verify_schur_constant_terms,
};

use crate::error::{Result, SerpError};
use crate::report::CheckSet;
use crate::symfun::{complete, rat, Rational, SymFun, Workspace};
use crate::virasoro::FockState;
use oracle::SchurCache;

/// The two sign choices left open in `E(z) = Γ_−(z) Γ_+(z) z^{σ·(−h_0)} V^{∓1}`:
/// the charge step of the lattice shift and the sign of the `z^{−h_0}` factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModeConvention {
    /// `+2` or `−2`.
    pub step: i64,
    /// `+1` or `−1`.
    pub sigma: i64,
}

impl ModeConvention {
    pub const STANDARD: ModeConvention = ModeConvention { step: 2, sigma: 1 };

    pub fn all() -> [ModeConvention; 4] {
        [
            ModeConvention { step: 2, sigma: 1 },
            ModeConvention { step: 2, sigma: -1 },
            ModeConvention { step: -2, sigma: 1 },
            ModeConvention { step: -2, sigma: -1 },
        ]
    }
}

/// `e_m s`: the `z^{−(m+1)}` coefficient of `E(z) s`. On `f Ω_c` with
/// `c' = c + step` this is `Σ_{d − a = m + 1 − σc'} H_d Γ_+^{(a)} f · Ω_{c'}`.
pub fn e_mode_apply(m: i64, s: &FockState, conv: ModeConvention, ws: &Workspace) -> Result<FockState> {
    let mut out = FockState::zero();
    for (c, f) in s.components() {
        let target_charge = c + conv.step;
        let gap = m + 1 - conv.sigma * target_charge;
        let deg = f.max_degree().unwrap_or(0) as i64;
        let mut acc = SymFun::zero();
        for a in 0..=deg {
            let d = gap + a;
            if d < 0 {
                continue;
            }
            let result_degree = (deg - a + d) as u32;
            if result_degree > ws.degree_bound {
                if ws.truncate {
                    continue;
                }
                return Err(SerpError::DegreeOverflow { degree: result_degree, bound: ws.degree_bound });
            }
            let g = gamma_plus_mode(a as u32, f);
            if g.is_zero() {
                continue;
            }
            acc = &acc + &(&complete(d as u32) * &g);
        }
        out.add_component(target_charge, acc);
    }
    Ok(out)
}

/// `ẽ_{α_1} ⋯ ẽ_{α_k} Ω_{−2k}` with `ẽ_j = e_{−(k−j)}`, applying the
/// rightmost mode first.
pub fn e_monomial_composed(k: usize, alpha: &[u32], conv: ModeConvention, ws: &Workspace) -> Result<FockState> {
    let mut s = FockState::vacuum(-2 * k as i64);
    for &a in alpha.iter().rev() {
        s = e_mode_apply(-(k as i64 - a as i64), &s, conv, ws)?;
    }
    Ok(s)
}

/// Which form of the vacuum identity pins down the convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CalibrationReading {
    /// `e_{−(N+1)} Ω_{−N} = Ω_{−(N+2)}`
    AsPrinted,
    /// `e_{−(N+1)} Ω_{−(N+2)} = Ω_{−N}`
    Corrected,
}

/// Whether the vacuum identity holds for `N ∈ {0, 2, 4}`.
pub fn vacuum_identity_holds(conv: ModeConvention, reading: CalibrationReading, ws: &Workspace) -> Result<bool> {
    for n in [0i64, 2, 4] {
        let (from, to) = match reading {
            CalibrationReading::AsPrinted => (-n, -(n + 2)),
            CalibrationReading::Corrected => (-(n + 2), -n),
        };
        if e_mode_apply(-(n + 1), &FockState::vacuum(from), conv, ws)? != FockState::vacuum(to) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Composed modes against the constant-term formula for every multiset `α`
/// of size `k` from `{0, …, k}`. Returns the checks and the common ratio
/// `composed / oracle` when there is one.
pub fn compare_with_oracle(k: usize, conv: ModeConvention, ws: &Workspace) -> Result<(CheckSet, Option<Rational>)> {
    let mut schur = SchurCache::default();
    let mut ratio: Option<Rational> = None;
    let mut uniform = true;
    let mut witness = None;
    for alpha in multisets(k, k as u32) {
        let composed = e_monomial_composed(k, &alpha, conv, ws)?;
        let oracle = oracle::e_monomial_oracle_cached(k, &alpha, ws, &mut schur)?;
        let only_charge_zero = composed.components().all(|(c, _)| c == 0);
        let r = if only_charge_zero { composed.component(0).ratio_to(&oracle) } else { None };
        match (&ratio, r) {
            (_, None) => {
                uniform = false;
                witness = Some(alpha);
                break;
            }
            (None, Some(r)) => ratio = Some(r),
            (Some(prev), Some(r)) if *prev != r => {
                uniform = false;
                witness = Some(alpha);
                break;
            }
            _ => {}
        }
    }
    let mut set = CheckSet::new();
    let check = crate::report::Check::verdict(
        format!("k={k} composed e-modes proportional to the constant-term formula"),
        uniform,
        ratio.clone(),
        "uniform ratio",
    );
    set.push(match witness {
        Some(a) => check.with_witness(a),
        None => check,
    });
    Ok((set, if uniform { ratio } else { None }))
}

/// The convention selected by calibration together with the measured signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Calibration {
    pub convention: ModeConvention,
    /// `(k, composed / oracle)` for the `k` used in calibration.
    pub ratios: Vec<(usize, Rational)>,
}

/// Finds the unique convention satisfying the vacuum identity (in the given
/// reading) whose composed modes agree with the constant-term formula up to
/// sign for `k = 1, 2`.
pub fn calibrate(reading: CalibrationReading, ws: &Workspace) -> Result<Calibration> {
    let mut found = Vec::new();
    for conv in ModeConvention::all() {
        if !vacuum_identity_holds(conv, reading, ws)? {
            continue;
        }
        let mut ratios = Vec::new();
        for k in 1..=2 {
            match compare_with_oracle(k, conv, ws)?.1 {
                Some(r) if r.abs().is_one() => ratios.push((k, r)),
                _ => break,
            }
        }
        if ratios.len() == 2 {
            found.push(Calibration { convention: conv, ratios });
        }
    }
    match found.len() {
        1 => Ok(found.pop().expect("one element")),
        0 => Err(SerpError::VerificationFailed {
            check: "calibration".into(),
            detail: format!("no convention satisfies the {reading:?} vacuum identity and the oracle"),
        }),
        _ => Err(SerpError::VerificationFailed {
            check: "calibration".into(),
            detail: format!("{} conventions remain; calibration is ambiguous", found.len()),
        }),
    }
}

/// `(−1)^{k(k−1)/2}`, the sign the composed modes carry relative to the
/// constant-term formula.
pub fn expected_sign(k: usize) -> Rational {
    if (k * (k.saturating_sub(1)) / 2).is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    }
}
