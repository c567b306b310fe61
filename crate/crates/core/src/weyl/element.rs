use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank accepted by the exhaustive enumerations.
pub const MAX_RANK: usize = 6;

/// Element of the type C Weyl group of rank `r`, stored as a permutation of
/// `[1, 2r]` commuting with `k -> 2r + 1 - k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawElement", into = "RawElement")]
pub struct WeylElement {
    images: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawElement {
    images: Vec<usize>,
}

impl TryFrom<RawElement> for WeylElement {
    type Error = Error;
    fn try_from(raw: RawElement) -> Result<Self> {
        Self::from_images(&raw.images)
    }
}

impl From<WeylElement> for RawElement {
    fn from(w: WeylElement) -> Self {
        RawElement {
            images: w.images.iter().map(|&x| x as usize).collect(),
        }
    }
}

impl WeylElement {
    pub fn identity(r: usize) -> Self {
        Self {
            images: (1..=2 * r as u8).collect(),
        }
    }

    /// Validates a one-line image list.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let len = images.len();
        if !len.is_multiple_of(2) || len / 2 > 127 {
            return Err(Error::InvalidElement(format!(
                "image list of length {len} is not of the form 2r"
            )));
        }
        let mut seen = vec![false; len + 1];
        for (k, &x) in images.iter().enumerate() {
            if x == 0 || x > len || seen[x] {
                return Err(Error::InvalidElement(format!(
                    "{images:?} is not a permutation of [1, {len}]"
                )));
            }
            seen[x] = true;
            if images[len - 1 - k] != len + 1 - x {
                return Err(Error::InvalidElement(format!(
                    "{images:?} does not commute with the flip k -> {} - k",
                    len + 1
                )));
            }
        }
        Ok(Self {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// Generator `s_j`, `1 <= j <= r`.
    pub fn generator(j: usize, r: usize) -> Result<Self> {
        if j == 0 || j > r {
            return Err(Error::GeneratorOutOfRange { index: j, rank: r });
        }
        Ok(Self::identity(r).mul_gen_right(j))
    }

    /// Product of generators, read left to right.
    pub fn from_word(word: &[usize], r: usize) -> Result<Self> {
        let mut w = Self::identity(r);
        for &j in word {
            if j == 0 || j > r {
                return Err(Error::GeneratorOutOfRange { index: j, rank: r });
            }
            w = w.mul_gen_right(j);
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.images.len() / 2
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// `w(k)` for `k` in `[1, 2r]`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &x)| x as usize == k + 1)
    }

    /// `self * other`, acting as `k -> self(other(k))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(Self {
            images: other
                .images
                .iter()
                .map(|&y| self.images[y as usize - 1])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.images.len()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = k as u8 + 1;
        }
        Self { images: inv }
    }

    /// `self * s_j`: permutes positions.
    pub fn mul_gen_right(&self, j: usize) -> Self {
        let r = self.rank();
        let mut images = self.images.clone();
        if j == r {
            images.swap(r - 1, r);
        } else {
            images.swap(j - 1, j);
            images.swap(2 * r - j - 1, 2 * r - j);
        }
        Self { images }
    }

    /// `s_j * self`: permutes values.
    pub fn mul_gen_left(&self, j: usize) -> Self {
        let r = self.rank() as u8;
        let j = j as u8;
        let swap = |x: u8| -> u8 {
            if j == r {
                match x {
                    x if x == r => r + 1,
                    x if x == r + 1 => r,
                    x => x,
                }
            } else if x == j {
                j + 1
            } else if x == j + 1 {
                j
            } else if x == 2 * r - j {
                2 * r + 1 - j
            } else if x == 2 * r + 1 - j {
                2 * r - j
            } else {
                x
            }
        };
        Self {
            images: self.images.iter().map(|&x| swap(x)).collect(),
        }
    }

    /// Whether `l(self * s_j) < l(self)`.
    pub fn has_right_descent(&self, j: usize) -> bool {
        self.images[j - 1] > self.images[j]
    }

    /// Whether `l(s_j * self) < l(self)`.
    pub fn has_left_descent(&self, j: usize) -> bool {
        self.inverse().has_right_descent(j)
    }

    /// A reduced word, found by stripping right descents.
    pub fn reduced_word(&self) -> Vec<usize> {
        let r = self.rank();
        let mut w = self.clone();
        let mut word = Vec::new();
        'outer: loop {
            for j in 1..=r {
                if w.has_right_descent(j) {
                    w = w.mul_gen_right(j);
                    word.push(j);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    /// Coxeter length.
    pub fn length(&self) -> usize {
        self.reduced_word().len()
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{:?}", self.images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_as_permutations() {
        assert_eq!(
            WeylElement::from_word(&[2], 2).unwrap().images(),
            vec![1, 3, 2, 4]
        );
        assert_eq!(
            WeylElement::from_word(&[1], 2).unwrap().images(),
            vec![2, 1, 4, 3]
        );
        assert_eq!(
            WeylElement::from_word(&[1], 1).unwrap().images(),
            vec![2, 1]
        );
    }

    #[test]
    fn word_rejects_bad_generator() {
        assert_eq!(
            WeylElement::from_word(&[3], 2),
            Err(Error::GeneratorOutOfRange { index: 3, rank: 2 })
        );
    }

    #[test]
    fn from_images_checks_symmetry() {
        assert!(WeylElement::from_images(&[2, 1, 4, 3]).is_ok());
        assert!(WeylElement::from_images(&[2, 1, 3, 4]).is_err());
        assert!(WeylElement::from_images(&[1, 1, 4, 4]).is_err());
        assert!(WeylElement::from_images(&[1, 2, 3]).is_err());
    }

    #[test]
    fn left_and_right_generator_products_agree_with_compose() {
        let w = WeylElement::from_word(&[1, 2, 1], 2).unwrap();
        for j in 1..=2 {
            let s = WeylElement::generator(j, 2).unwrap();
            assert_eq!(w.mul_gen_right(j), w.compose(&s).unwrap());
            assert_eq!(w.mul_gen_left(j), s.compose(&w).unwrap());
        }
    }

    #[test]
    fn longest_element_of_rank_two() {
        let w = WeylElement::from_word(&[1, 2, 1, 2], 2).unwrap();
        assert_eq!(w.images(), vec![4, 3, 2, 1]);
        assert_eq!(w.length(), 4);
    }

    #[test]
    fn json_shape() {
        let w = WeylElement::from_word(&[2], 2).unwrap();
        assert_eq!(
            serde_json::to_string(&w).unwrap(),
            r#"{"images":[1,3,2,4]}"#
        );
        let bad: std::result::Result<WeylElement, _> =
            serde_json::from_str(r#"{"images":[1,2,4,3,5]}"#);
        assert!(bad.is_err());
    }
}
