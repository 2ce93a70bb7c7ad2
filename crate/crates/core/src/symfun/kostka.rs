use crate::error::{invalid, Result, SerpError};
use crate::partition::Partition;
use crate::qpoly::QPoly;
use crate::tableau::enumerate_two_row_tableaux;

/// `K_{νμ}`: semistandard tableaux of shape `ν` and content `μ`, counted by
/// backtracking. The entries `1, 2, …` are placed in turn, each as a
/// horizontal strip of length `μ_i`.
pub fn kostka_number(nu: &Partition, mu: &Partition) -> Result<u64> {
    if nu.size() != mu.size() {
        return invalid(format!("kostka_number: |{nu}| = {} but |{mu}| = {}", nu.size(), mu.size()));
    }
    let mut shape = vec![0u32; nu.len()];
    Ok(place(nu.parts(), mu.parts(), &mut shape, 0))
}

fn place(target: &[u32], content: &[u32], shape: &mut [u32], value: usize) -> u64 {
    if value == content.len() {
        return 1;
    }
    let prev = shape.to_vec();
    let mut count = 0;
    strips(target, &prev, shape, 0, content[value], &mut |s| {
        count += place(target, content, s, value + 1);
    });
    count
}

/// Visits every shape obtained from `prev` by adding a horizontal strip of
/// `left` cells inside `target`, choosing row `row` onwards.
fn strips(target: &[u32], prev: &[u32], shape: &mut [u32], row: usize, left: u32, visit: &mut dyn FnMut(&mut [u32])) {
    if left == 0 {
        visit(shape);
        return;
    }
    if row == target.len() {
        return;
    }
    // a horizontal strip may extend row `row` up to the old end of the row above
    let cap = if row == 0 { target[0] } else { target[row].min(prev[row - 1]) };
    let room = cap.saturating_sub(prev[row]);
    for add in (0..=room.min(left)).rev() {
        shape[row] = prev[row] + add;
        strips(target, prev, shape, row + 1, left - add, visit);
    }
    shape[row] = prev[row];
}

fn two_row_check(lambda: &Partition, op: &str) -> Result<()> {
    if lambda.len() > 2 {
        return Err(SerpError::Unsupported(format!(
            "{op} is implemented for shapes with at most two rows, got {lambda}"
        )));
    }
    if lambda.is_empty() {
        return invalid(format!("{op}: empty shape"));
    }
    Ok(())
}

/// `K_{λ,1^N}(q) = Σ q^{charge(τ)}` over standard tableaux of shape `λ`.
pub fn kostka_foulkes_standard(lambda: &Partition) -> Result<QPoly> {
    two_row_check(lambda, "kostka_foulkes_standard")?;
    let tabs = enumerate_two_row_tableaux(lambda.size() as usize, Some(lambda))?;
    Ok(QPoly::from_exponents(tabs.iter().map(|t| t.charge() as i64)))
}

/// `Σ q^{maj(τ)}` over standard tableaux of shape `λ`.
pub fn maj_qcharacter(lambda: &Partition) -> Result<QPoly> {
    two_row_check(lambda, "maj_qcharacter")?;
    let tabs = enumerate_two_row_tableaux(lambda.size() as usize, Some(lambda))?;
    Ok(QPoly::from_exponents(tabs.iter().map(|t| t.maj() as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka_number(&part(&[3]), &part(&[1, 1, 1])).unwrap(), 1);
        assert_eq!(kostka_number(&part(&[3]), &part(&[2, 1])).unwrap(), 1);
        assert_eq!(kostka_number(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka_number(&part(&[2, 2]), &part(&[1, 1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka_number(&part(&[2, 1]), &part(&[3])).unwrap(), 0);
        assert_eq!(kostka_number(&part(&[3, 2]), &part(&[2, 2, 1])).unwrap(), 2);
        assert!(kostka_number(&part(&[2]), &part(&[1])).is_err());
        assert_eq!(kostka_number(&Partition::empty(), &Partition::empty()).unwrap(), 1);
    }

    #[test]
    fn unsorted_content_gives_same_count() {
        // K_{νμ} is symmetric in the order of the content; feed (1,2) via a
        // hand-built slice
        let nu = part(&[2, 1]);
        let mut shape = vec![0; 2];
        assert_eq!(place(nu.parts(), &[1, 2], &mut shape, 0), 1);
        assert_eq!(kostka_number(&nu, &part(&[2, 1])).unwrap(), 1);
    }

    #[test]
    fn charge_and_maj_polynomials() {
        assert_eq!(kostka_foulkes_standard(&part(&[1, 1])).unwrap(), QPoly::one());
        assert_eq!(kostka_foulkes_standard(&part(&[2])).unwrap(), QPoly::monomial(1, 1));
        assert_eq!(kostka_foulkes_standard(&part(&[2, 1])).unwrap(), QPoly::from_exponents([1, 2]));
        assert_eq!(maj_qcharacter(&part(&[2, 2])).unwrap(), QPoly::from_exponents([2, 4]));
        assert_eq!(maj_qcharacter(&part(&[3, 1])).unwrap(), QPoly::from_exponents([1, 2, 3]));
        assert_eq!(maj_qcharacter(&part(&[4])).unwrap(), QPoly::one());
        assert!(matches!(kostka_foulkes_standard(&part(&[1, 1, 1])), Err(SerpError::Unsupported(_))));
    }
}
