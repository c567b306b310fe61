//! The preorder on matrices used for triangularity.

use std::collections::BTreeSet;

use crate::weyl::ThetaMatrix;

/// `sum_{i <= u, j >= v} a_{ij}`.
fn upper_corner(a: &ThetaMatrix, u: usize, v: usize) -> u32 {
    (1..=u)
        .map(|i| (v..=a.size()).map(|j| a.get(i, j)).sum::<u32>())
        .sum()
}

/// `sum_{i >= u, j <= v} a_{ij}`.
fn lower_corner(a: &ThetaMatrix, u: usize, v: usize) -> u32 {
    (u..=a.size())
        .map(|i| (1..=v).map(|j| a.get(i, j)).sum::<u32>())
        .sum()
}

/// `A ≼ B`: every upper-right corner sum of `A` is at most that of `B`.
pub fn preorder_leq(a: &ThetaMatrix, b: &ThetaMatrix) -> bool {
    let s = a.size();
    (1..=s).all(|u| (u + 1..=s).all(|v| upper_corner(a, u, v) <= upper_corner(b, u, v)))
}

/// The same preorder via corner sums that only touch the top half rows and
/// the lower-left corners of the top-left block.
pub fn preorder_leq_half(a: &ThetaMatrix, b: &ThetaMatrix) -> bool {
    let n = a.n();
    let s = a.size();
    let upper =
        (1..=n).all(|u| (u + 1..=s).all(|v| upper_corner(a, u, v) <= upper_corner(b, u, v)));
    let lower = (1..=n).all(|u| (1..u).all(|v| lower_corner(a, u, v) <= lower_corner(b, u, v)));
    upper && lower
}

/// `A ≺ B`: `A ≼ B` and not `B ≼ A`.
pub fn strictly_less(a: &ThetaMatrix, b: &ThetaMatrix) -> bool {
    preorder_leq(a, b) && !preorder_leq(b, a)
}

/// Orders `items` so that `A ≺ B` puts `A` first; ties broken by the
/// lexicographic order of the input.
pub fn linear_extension(items: &[ThetaMatrix]) -> Vec<ThetaMatrix> {
    let mut sorted = items.to_vec();
    sorted.sort();
    let k = sorted.len();
    let mut indegree = vec![0usize; k];
    let mut succ = vec![Vec::new(); k];
    for i in 0..k {
        for j in 0..k {
            if i != j && strictly_less(&sorted[i], &sorted[j]) {
                succ[i].push(j);
                indegree[j] += 1;
            }
        }
    }
    let mut ready: BTreeSet<usize> = (0..k).filter(|&i| indegree[i] == 0).collect();
    let mut out = Vec::with_capacity(k);
    while let Some(i) = ready.pop_first() {
        out.push(sorted[i].clone());
        for &j in &succ[i] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                ready.insert(j);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_is_below_antidiagonal() {
        let d = ThetaMatrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        let e = ThetaMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(strictly_less(&d, &e));
        assert!(!strictly_less(&e, &d));
        assert_eq!(linear_extension(&[e.clone(), d.clone()]), vec![d, e]);
    }
}
