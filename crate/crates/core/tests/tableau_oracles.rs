//! Tableau enumeration and statistics against brute force over permutations
//! and the reading-word charge.

use std::collections::BTreeSet;

use proptest::prelude::*;
use serpentine::qpoly::QPoly;
use serpentine::serpentine::{enumerate_serpentine, serpentine_level_set};
use serpentine::symfun::{kostka_foulkes_standard, maj_qcharacter};
use serpentine::tableau::{enumerate_two_row_tableaux, two_row_shapes};
use serpentine::TwoRowTableau;

fn permutations(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

#[test]
fn enumeration_matches_permutation_filter() {
    for n in 1..=8u32 {
        let perms = permutations(n);
        for shape in two_row_shapes(n as usize) {
            let a = shape.part(0) as usize;
            let brute: BTreeSet<(Vec<u32>, Vec<u32>)> = perms
                .iter()
                .filter_map(|w| {
                    let (r1, r2) = w.split_at(a);
                    let ok = r1.windows(2).all(|x| x[0] < x[1])
                        && r2.windows(2).all(|x| x[0] < x[1])
                        && r2.iter().zip(r1).all(|(b, a)| b > a);
                    ok.then(|| (r1.to_vec(), r2.to_vec()))
                })
                .collect();
            let got: BTreeSet<(Vec<u32>, Vec<u32>)> = enumerate_two_row_tableaux(n as usize, Some(&shape))
                .unwrap()
                .into_iter()
                .map(|t| (t.row1().to_vec(), t.row2().to_vec()))
                .collect();
            assert_eq!(got, brute, "N={n} shape {shape}");
        }
    }
}

/// Lascoux–Schützenberger charge of a standard word: the letter 1 has index
/// 0, and `i+1` gets the index of `i`, plus one when it stands to the right.
fn word_charge(word: &[u32]) -> u64 {
    let mut pos = vec![0usize; word.len() + 1];
    for (i, &x) in word.iter().enumerate() {
        pos[x as usize] = i;
    }
    let mut index = 0u64;
    let mut total = 0u64;
    for x in 2..=word.len() {
        if pos[x] > pos[x - 1] {
            index += 1;
        }
        total += index;
    }
    total
}

/// Reading word: bottom row first, left to right.
fn reading_word(t: &TwoRowTableau) -> Vec<u32> {
    t.row2().iter().chain(t.row1()).copied().collect()
}

#[test]
fn kostka_foulkes_matches_reading_word_charge() {
    for n in 1..=12usize {
        for shape in two_row_shapes(n) {
            let oracle = QPoly::from_exponents(
                enumerate_two_row_tableaux(n, Some(&shape))
                    .unwrap()
                    .iter()
                    .map(|t| word_charge(&reading_word(t)) as i64),
            );
            assert_eq!(kostka_foulkes_standard(&shape).unwrap(), oracle, "N={n} shape {shape}");
        }
    }
}

#[test]
fn kostka_foulkes_small_values() {
    // top degree n(1^N) − n(λ) with coefficient 1
    let sh = |a, b| serpentine::Partition::from_unsorted(vec![a, b]);
    assert_eq!(kostka_foulkes_standard(&sh(2, 1)).unwrap(), QPoly::from_exponents([1, 2]));
    assert_eq!(kostka_foulkes_standard(&sh(2, 2)).unwrap(), QPoly::from_exponents([2, 4]));
    for (a, b) in [(4, 2), (5, 3), (6, 0), (3, 3)] {
        let k = kostka_foulkes_standard(&sh(a, b)).unwrap();
        let n = (a + b) as i64;
        let top = n * (n - 1) / 2 - b as i64;
        assert_eq!((k.max_degree(), k.coeff(top)), (Some(top), 1), "({a},{b})");
    }
    assert_eq!(maj_qcharacter(&sh(4, 2)).unwrap().eval_at_one(), 9);
}

#[test]
fn level_sets_are_binomial() {
    for k in 0..=6usize {
        let t = serpentine_level_set(2 * k).unwrap();
        assert_eq!(t.len() as u64, num_integer::binomial(2 * k as u64, k as u64));
        let distinct: BTreeSet<_> = t.iter().collect();
        assert_eq!(distinct.len(), t.len());
    }
}

#[test]
fn serpentine_enumeration_is_stable_in_rmax() {
    let small = enumerate_serpentine(6);
    let large = enumerate_serpentine(9);
    let restricted: Vec<_> = large.into_iter().filter(|t| t.stable_major_index() <= 6).collect();
    assert_eq!(small, restricted);
}

/// A random standard tableau from a ballot sequence: `true` puts the next
/// entry in the second row whenever that keeps the shape a partition.
fn tableau_from_bits(bits: &[bool]) -> TwoRowTableau {
    let (mut r1, mut r2) = (Vec::new(), Vec::new());
    for (i, &b) in bits.iter().enumerate() {
        let x = i as u32 + 1;
        if b && r2.len() < r1.len() {
            r2.push(x);
        } else {
            r1.push(x);
        }
    }
    TwoRowTableau::new(r1, r2).unwrap()
}

proptest! {
    #[test]
    fn maj_plus_charge(bits in prop::collection::vec(any::<bool>(), 0..=24)) {
        let t = tableau_from_bits(&bits);
        let n = t.size() as u64;
        prop_assert_eq!(t.maj() + t.charge(), n * n.saturating_sub(1) / 2);
    }

    #[test]
    fn embedding_shifts_maj(bits in prop::collection::vec(any::<bool>(), 0..=24)) {
        let t = tableau_from_bits(&bits);
        let e = t.embed();
        prop_assert_eq!(e.maj(), t.maj() + t.size() as u64 + 1);
        prop_assert_eq!(e.unembed(), Some(t.clone()));
        prop_assert_eq!(e.truncate(t.size()), t);
    }

    #[test]
    fn descents_are_row_drops(bits in prop::collection::vec(any::<bool>(), 1..=24)) {
        let t = tableau_from_bits(&bits);
        for i in 1..t.size() as u32 {
            let lower = t.row2().contains(&(i + 1)) && t.row1().contains(&i);
            prop_assert_eq!(t.descent_set().contains(&i), lower);
        }
    }

    #[test]
    fn display_parse_roundtrip(bits in prop::collection::vec(any::<bool>(), 0..=20)) {
        let t = tableau_from_bits(&bits);
        prop_assert_eq!(t.to_string().parse::<TwoRowTableau>().unwrap(), t);
    }
}
