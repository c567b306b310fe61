use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A composition `(lambda_1, ..., lambda_n)` of `r` into `n` nonnegative parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Composition {
    pub parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        Ok(Self { parts })
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn r(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// `(lambda_1, ..., lambda_n, lambda_n, ..., lambda_1)`.
    pub fn hat(&self) -> Vec<u32> {
        let mut out = self.parts.clone();
        out.extend(self.parts.iter().rev());
        out
    }

    /// Generator indices `j` with `s_j` in the standard parabolic subgroup:
    /// those not equal to a partial sum `lambda_1 + ... + lambda_i`.
    pub fn parabolic_generators(&self) -> Vec<usize> {
        let r = self.r();
        let mut cut = vec![false; r + 1];
        let mut acc = 0usize;
        for &p in &self.parts {
            acc += p as usize;
            cut[acc] = true;
        }
        (1..=r).filter(|&j| !cut[j]).collect()
    }

    /// All compositions of `r` into `n` parts, in lexicographic order.
    pub fn all(n: usize, r: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
            let n = cur.len();
            if i + 1 == n {
                cur[i] = left;
                out.push(Composition { parts: cur.clone() });
                return;
            }
            for x in 0..=left {
                cur[i] = x;
                rec(i + 1, left - x, cur, out);
            }
        }
        if n > 0 {
            rec(0, r as u32, &mut cur, &mut out);
        }
        out
    }
}

/// All weak compositions of `total` into `len` parts bounded entrywise by
/// `bound`, in lexicographic order.
pub fn bounded_compositions(total: u32, bound: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; bound.len()];
    let suffix: Vec<u32> = (0..=bound.len()).map(|i| bound[i..].iter().sum()).collect();
    fn rec(
        i: usize,
        left: u32,
        bound: &[u32],
        suffix: &[u32],
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == bound.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if suffix[i] < left {
            return;
        }
        for x in 0..=left.min(bound[i]) {
            cur[i] = x;
            rec(i + 1, left - x, bound, suffix, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, total, bound, &suffix, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_and_order() {
        let all = Composition::all(2, 2);
        let parts: Vec<_> = all.iter().map(|c| c.parts.clone()).collect();
        assert_eq!(parts, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(Composition::all(3, 2).len(), 6);
        assert_eq!(Composition::all(2, 0).len(), 1);
    }

    #[test]
    fn parabolic_generators_skip_partial_sums() {
        let c = Composition::new(vec![2, 1]).unwrap();
        assert_eq!(c.parabolic_generators(), vec![1]);
        let c = Composition::new(vec![0, 3]).unwrap();
        assert_eq!(c.parabolic_generators(), vec![1, 2]);
        assert_eq!(c.hat(), vec![0, 3, 3, 0]);
    }

    #[test]
    fn bounded() {
        assert_eq!(
            bounded_compositions(2, &[1, 0, 2]),
            vec![vec![0, 0, 2], vec![1, 0, 1]]
        );
        assert!(bounded_compositions(4, &[1, 1]).is_empty());
    }
}
