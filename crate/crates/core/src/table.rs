//! Images of the serpentine tableaux with `r ≤ 4` in Λ, up to scalars, and the
//! structural checks they must satisfy.

use crate::error::Result;
use crate::linalg::SpanBasis;
use crate::partition::Partition;
use crate::report::CheckSet;
use crate::serpentine::{enumerate_serpentine, serpentine_level_set, SerpentineTableau};
use crate::symfun::{schur_to_p, Rational, SymFun, Workspace};
use crate::tableau::TwoRowTableau;
use crate::virasoro::{l_apply, FockState};

/// `Φ(τ)` as `(coefficient, parts)` pairs of power sums.
type Image = &'static [(i64, &'static [u32])];

/// `(r, base tableau, Φ(τ))`.
const ENTRIES: &[(i64, &str, Image)] = &[
    (0, "[]", &[(1, &[])]),
    (1, "[1 2]", &[(1, &[1])]),
    (2, "[1 2 4 / 3]", &[(1, &[2])]),
    (2, "[1 2 / 3 4]", &[(1, &[1, 1])]),
    (3, "[1 3 4 / 2]", &[(1, &[1, 1, 1]), (-1, &[3])]),
    (3, "[1 2 4 6 / 3 5]", &[(1, &[1, 1, 1]), (8, &[3])]),
    (3, "[1 2 4 / 3 5 6]", &[(1, &[2, 1])]),
    (4, "[1 2 3 4]", &[(1, &[1, 1, 1, 1]), (3, &[2, 2]), (-4, &[3, 1])]),
    (4, "[1 3 4 / 2 5 6]", &[(1, &[1, 1, 1, 1]), (-3, &[2, 2]), (2, &[3, 1])]),
    (4, "[1 2 4 6 / 3 5 7 8]", &[(1, &[1, 1, 1, 1]), (12, &[2, 2]), (32, &[3, 1])]),
    (4, "[1 3 4 6 / 2 5]", &[(1, &[2, 1, 1]), (-1, &[4])]),
    (4, "[1 2 4 6 8 / 3 5 7]", &[(1, &[2, 1, 1]), (4, &[4])]),
];

/// The tableau the printed table pairs with `p_1^3 − p_3`; it is `τ_1`
/// continued once, whose index is 1, not 3.
pub const MISPRINTED_R3_BASE: &str = "[1 2 3 / 4]";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub r: i64,
    pub tableau: SerpentineTableau,
    pub phi: SymFun,
}

pub fn example_table() -> Vec<TableEntry> {
    ENTRIES
        .iter()
        .map(|&(r, base, phi)| TableEntry {
            r,
            tableau: SerpentineTableau::from_base(base.parse::<TwoRowTableau>().expect("valid table tableau"))
                .expect("even base"),
            phi: SymFun::from_int_terms(phi),
        })
        .collect()
}

/// Structural checks on the table:
///
/// * entries per `r` are `(1, 1, 2, 3, 5)` and are exactly the serpentine
///   tableaux with that index;
/// * `deg Φ(τ) = r(τ)` and `L_0 Φ(τ) = r(τ) Φ(τ)`;
/// * same-degree entries are pairwise orthogonal and span `Λ_r`;
/// * `Φ(τ_k) ∝ s_{(k^k)}` for `k ≤ 2`, and those images are singular;
/// * the images of `T^{(4)}` span `Λ_{2×2}`.
pub fn verify_table(ws: &Workspace) -> Result<CheckSet> {
    let table = example_table();
    let mut set = CheckSet::new();

    let counts: Vec<usize> = (0..=4).map(|r| table.iter().filter(|e| e.r == r).count()).collect();
    set.equal("entries per r", &counts, &vec![1, 1, 2, 3, 5]);

    let all = enumerate_serpentine(4);
    for r in 0..=4 {
        let mut listed: Vec<String> = table.iter().filter(|e| e.r == r).map(|e| e.tableau.to_string()).collect();
        let mut found: Vec<String> =
            all.iter().filter(|t| t.stable_major_index() == r).map(|t| t.to_string()).collect();
        listed.sort();
        found.sort();
        set.equal(format!("r={r} entries are the serpentine tableaux of index {r}"), &listed, &found);
    }

    let misprint: TwoRowTableau = MISPRINTED_R3_BASE.parse().expect("valid tableau");
    let misprint = SerpentineTableau::from_base(misprint)?;
    set.equal(
        format!("printed {MISPRINTED_R3_BASE} is tau_1 with r = 1"),
        &(misprint.stable_major_index(), misprint == SerpentineTableau::principal(1)),
        &(1, true),
    );

    for e in &table {
        set.equal(format!("r({}) = {}", e.tableau, e.r), &e.tableau.stable_major_index(), &e.r);
        set.equal(format!("deg Phi({}) = r", e.tableau), &e.phi.degree(), &Some(e.r as u32));
        let state = FockState::new(0, e.phi.clone());
        set.equal(
            format!("L_0 Phi({}) = {} Phi", e.tableau, e.r),
            &l_apply(0, &state, ws)?,
            &state.scale(&Rational::from_integer(e.r.into())),
        );
    }

    for (i, a) in table.iter().enumerate() {
        for b in &table[i + 1..] {
            if a.r == b.r {
                set.equal(
                    format!("<{}, {}> = 0", a.phi, b.phi),
                    &a.phi.inner_product(&b.phi),
                    &Rational::from_integer(0.into()),
                );
            }
        }
    }

    for r in 0..=4u32 {
        let coords = Partition::all_of(r);
        let mut span = SpanBasis::new(coords.len());
        for e in table.iter().filter(|e| e.r == r as i64) {
            span.extend(&coords.iter().map(|l| e.phi.coeff(l)).collect::<Vec<_>>())?;
        }
        set.equal(format!("degree {r} entries span Lambda_{r}"), &span.dim(), &coords.len());
    }

    for k in 0..=2u32 {
        let principal = SerpentineTableau::principal(k);
        let entry = table.iter().find(|e| e.tableau == principal).expect("principal tableaux are listed");
        let square = schur_to_p(&Partition::rectangle(k as usize, k));
        set.verdict(
            format!("Phi(tau_{k}) proportional to s_({k}^{k})"),
            entry.phi.ratio_to(&square).is_some(),
            entry.phi.clone(),
            square,
        );
        let state = FockState::new(0, entry.phi.clone());
        let singular = (1..=4).map(|n| l_apply(n, &state, ws)).collect::<Result<Vec<_>>>()?;
        set.verdict(
            format!("L_n Phi(tau_{k}) = 0 for n = 1..4"),
            singular.iter().all(FockState::is_zero),
            singular,
            Vec::<FockState>::new(),
        );
    }

    let level4 = serpentine_level_set(4)?;
    let coords = Partition::up_to(4);
    let to_vec = |f: &SymFun| coords.iter().map(|l| f.coeff(l)).collect::<Vec<_>>();
    let mut images = SpanBasis::new(coords.len());
    for t in &level4 {
        let e = table.iter().find(|e| &e.tableau == t).expect("T^(4) lies in the table");
        images.extend(&to_vec(&e.phi))?;
    }
    let mut square = SpanBasis::new(coords.len());
    for l in Partition::in_box(2, 2) {
        square.extend(&to_vec(&schur_to_p(&l)))?;
    }
    set.equal("span Phi(T^(4)) = Lambda_(2x2)", &(images == square, images.dim()), &(true, 6));
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_passes() {
        let set = verify_table(&Workspace::default()).unwrap();
        assert!(set.all_passed(), "{:?}", set.failures().collect::<Vec<_>>());
    }

    #[test]
    fn orthogonality_example() {
        let a = SymFun::from_int_terms(&[(1, &[1, 1, 1]), (-1, &[3])]);
        let b = SymFun::from_int_terms(&[(1, &[1, 1, 1]), (8, &[3])]);
        assert_eq!(a.inner_product(&b), Rational::from_integer(0.into()));
    }
}
