use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A `2n x 2n` matrix of nonnegative integers with `a[i][j] = a[2n+1-i][2n+1-j]`.
///
/// Indices in the public API are 1-based to match the usual matrix notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct ThetaMatrix {
    n: usize,
    entries: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrix {
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<RawMatrix> for ThetaMatrix {
    type Error = Error;
    fn try_from(raw: RawMatrix) -> Result<Self> {
        let m = Self::from_rows(&raw.rows)?;
        if m.n != raw.n {
            return Err(Error::InvalidMatrix(format!(
                "declared n = {} but rows give n = {}",
                raw.n, m.n
            )));
        }
        Ok(m)
    }
}

impl From<ThetaMatrix> for RawMatrix {
    fn from(m: ThetaMatrix) -> Self {
        RawMatrix {
            n: m.n,
            rows: m.rows(),
        }
    }
}

impl ThetaMatrix {
    /// Validates shape and centro-symmetry.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let size = rows.len();
        if size == 0 || !size.is_multiple_of(2) {
            return Err(Error::InvalidMatrix(format!(
                "expected an even positive number of rows, got {size}"
            )));
        }
        if let Some(bad) = rows.iter().find(|row| row.len() != size) {
            return Err(Error::InvalidMatrix(format!(
                "row of length {} in a {size} x {size} matrix",
                bad.len()
            )));
        }
        for i in 0..size {
            for j in 0..size {
                if rows[i][j] != rows[size - 1 - i][size - 1 - j] {
                    return Err(Error::InvalidMatrix(format!(
                        "entry ({}, {}) differs from its centro-symmetric partner",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self {
            n: size / 2,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: vec![0; 4 * n * n],
        }
    }

    /// Diagonal matrix; `diag` must be a palindrome of length `2n`.
    pub fn diag(diag: &[u32]) -> Result<Self> {
        let size = diag.len();
        if size == 0 || !size.is_multiple_of(2) || (0..size).any(|i| diag[i] != diag[size - 1 - i])
        {
            return Err(Error::InvalidMatrix(format!(
                "diagonal {diag:?} is not a palindrome of even length"
            )));
        }
        let mut m = Self::zero(size / 2);
        for (i, &d) in diag.iter().enumerate() {
            m.entries[i * size + i] = d;
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Matrix size `2n`.
    pub fn size(&self) -> usize {
        2 * self.n
    }

    /// Entry `a_{ij}`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[(i - 1) * self.size() + (j - 1)]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries
            .chunks(self.size())
            .map(|c| c.to_vec())
            .collect()
    }

    /// Sum of all entries, `|A|`.
    pub fn total(&self) -> u32 {
        self.entries.iter().sum()
    }

    /// Row sums.
    pub fn ro(&self) -> Vec<u32> {
        self.entries
            .chunks(self.size())
            .map(|c| c.iter().sum())
            .collect()
    }

    /// Column sums.
    pub fn co(&self) -> Vec<u32> {
        let s = self.size();
        (0..s)
            .map(|j| (0..s).map(|i| self.entries[i * s + j]).sum())
            .collect()
    }

    pub fn diagonal(&self) -> Vec<u32> {
        let s = self.size();
        (0..s).map(|i| self.entries[i * s + i]).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        let s = self.size();
        self.entries
            .iter()
            .enumerate()
            .all(|(k, &x)| x == 0 || k / s == k % s)
    }

    /// The matrix with its diagonal cleared.
    pub fn off_diagonal(&self) -> Self {
        let s = self.size();
        let mut m = self.clone();
        for i in 0..s {
            m.entries[i * s + i] = 0;
        }
        m
    }

    /// `A + delta * E^theta_{ij}`, or `None` if an entry would go negative.
    pub fn add_e_theta(&self, i: usize, j: usize, delta: i64) -> Option<Self> {
        let s = self.size();
        let mut m = self.clone();
        let a = (i - 1) * s + (j - 1);
        let b = (s - i) * s + (s - j);
        for k in [a, b] {
            let x = m.entries[k] as i64 + delta;
            if x < 0 {
                return None;
            }
            m.entries[k] = x as u32;
        }
        Some(m)
    }

    /// `A + diag(d)` for a palindromic vector `d` of integers.
    pub fn add_diag(&self, d: &[i64]) -> Option<Self> {
        let s = self.size();
        let mut m = self.clone();
        for (i, &x) in d.iter().enumerate() {
            let y = m.entries[i * s + i] as i64 + x;
            if y < 0 {
                return None;
            }
            m.entries[i * s + i] = y as u32;
        }
        Some(m)
    }

    /// All matrices with `|A| = 2r`, in lexicographic order of row-major
    /// entries. The top `n` rows determine the matrix.
    pub fn all(n: usize, r: usize) -> Vec<Self> {
        let s = 2 * n;
        let half = n * s;
        let bound = vec![r as u32; half];
        let mut out: Vec<Self> = super::composition::bounded_compositions(r as u32, &bound)
            .into_iter()
            .map(|top| {
                let mut entries = vec![0u32; s * s];
                for (k, &x) in top.iter().enumerate() {
                    entries[k] = x;
                    entries[s * s - 1 - k] = x;
                }
                Self { n, entries }
            })
            .collect();
        out.sort();
        out
    }
}

/// `e^theta_i = e_i + e_{2n+1-i}` as a vector of length `2n`, 1-based `i`.
pub fn e_theta(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0i64; 2 * n];
    v[i - 1] += 1;
    v[2 * n - i] += 1;
    v
}

impl fmt::Debug for ThetaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(ThetaMatrix::all(1, 1).len(), 2);
        assert_eq!(ThetaMatrix::all(1, 2).len(), 3);
        assert_eq!(ThetaMatrix::all(2, 1).len(), 8);
        assert_eq!(ThetaMatrix::all(2, 2).len(), 36);
    }

    #[test]
    fn validation() {
        assert!(ThetaMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).is_ok());
        assert!(ThetaMatrix::from_rows(&[vec![1, 1], vec![0, 0]]).is_err());
        assert!(ThetaMatrix::from_rows(&[vec![1, 1, 0]]).is_err());
        assert!(ThetaMatrix::from_rows(&[vec![1, 0], vec![0]]).is_err());
    }

    #[test]
    fn e_theta_updates_both_entries() {
        let m = ThetaMatrix::zero(2).add_e_theta(2, 1, 1).unwrap();
        assert_eq!(m.get(2, 1), 1);
        assert_eq!(m.get(3, 4), 1);
        assert_eq!(m.total(), 2);
        assert!(ThetaMatrix::zero(2).add_e_theta(1, 1, -1).is_none());
    }

    #[test]
    fn json_round_trip() {
        let m = ThetaMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"n":1,"rows":[[0,1],[1,0]]}"#);
        assert_eq!(serde_json::from_str::<ThetaMatrix>(&s).unwrap(), m);
        assert!(serde_json::from_str::<ThetaMatrix>(r#"{"n":2,"rows":[[0,1],[1,0]]}"#).is_err());
    }
}
