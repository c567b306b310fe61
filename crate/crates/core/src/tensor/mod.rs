//! The tensor space `Omega^{⊗r}` over `Omega = Q(v)^{2n}` with the
//! `U(gl_2n)` action through the coproduct, the closed-form action of the
//! coideal subalgebra, the right Hecke action, and the map `eta` into the
//! Schur algebra.

mod action;
pub mod checks;
mod gl;

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qarith::LaurentPoly;

pub use action::{hecke_action_tensor, ui_action_closed, UiGen};
pub use gl::{gl_action, iota_image, GlExpr, GlGen};

/// `(i_1, ..., i_r)` with entries in `[1, 2n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(entries: Vec<usize>, n: usize) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&i| i == 0 || i > 2 * n) {
            return Err(Error::IndexOutOfRange {
                entry: bad,
                bound: 2 * n,
            });
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    /// Position `l`, 1-based.
    pub fn at(&self, l: usize) -> usize {
        self.0[l - 1]
    }

    /// Copy with position `l` replaced.
    pub fn with(&self, l: usize, value: usize) -> Self {
        let mut e = self.0.clone();
        e[l - 1] = value;
        Self(e)
    }

    /// Number of positions holding `value`, restricted to `range` (1-based).
    pub fn count(&self, value: usize, range: impl IntoIterator<Item = usize>) -> i64 {
        range
            .into_iter()
            .filter(|&k| self.0[k - 1] == value)
            .count() as i64
    }

    /// `(i_1, ..., i_r, i_{r+1}, ..., i_2r)` with `i_{2r+1-j} = 2n+1-i_j`.
    pub fn hat(&self, n: usize) -> Vec<usize> {
        let mut out = self.0.clone();
        out.extend(self.0.iter().rev().map(|&i| 2 * n + 1 - i));
        out
    }

    /// `wt(i)`: the first `n` entries of the weight of the hat extension.
    pub fn weight(&self, n: usize) -> Vec<u32> {
        let h = self.hat(n);
        (1..=n)
            .map(|j| h.iter().filter(|&&x| x == j).count() as u32)
            .collect()
    }

    /// All of `I(2n, r)` in lexicographic order.
    pub fn all(n: usize, r: usize) -> Vec<Self> {
        let mut out = vec![Vec::new()];
        for _ in 0..r {
            out = out
                .into_iter()
                .flat_map(|w: Vec<usize>| {
                    (1..=2 * n).map(move |x| {
                        let mut w = w.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(Self).collect()
    }
}

/// A vector of `Omega^{⊗r}` in the basis `omega_i`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorVector {
    n: usize,
    r: usize,
    terms: BTreeMap<MultiIndex, LaurentPoly>,
}

impl TensorVector {
    pub fn zero(n: usize, r: usize) -> Self {
        Self {
            n,
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(n: usize, i: &MultiIndex) -> Self {
        let mut v = Self::zero(n, i.r());
        v.add_term(i, &LaurentPoly::one());
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: &MultiIndex) -> LaurentPoly {
        self.terms.get(i).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn add_term(&mut self, i: &MultiIndex, c: &LaurentPoly) {
        assert_eq!(i.r(), self.r, "tensor index of the wrong length");
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(i.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(i);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(i, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&LaurentPoly::from_int(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.n, self.r);
        for (i, x) in &self.terms {
            out.add_term(i, &(x * c));
        }
        out
    }

    /// Applies a basis map linearly.
    pub fn map(&self, f: impl Fn(&MultiIndex) -> TensorVector) -> Self {
        let mut out = Self::zero(self.n, self.r);
        for (i, c) in &self.terms {
            out = out.add(&f(i).scale(c));
        }
        out
    }
}

impl fmt::Debug for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) w{:?}", i.0)?;
        }
        Ok(())
    }
}

impl Serialize for TensorVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Term<'a>(&'a MultiIndex, &'a LaurentPoly);
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("index", self.0)?;
                m.serialize_entry("coeff", self.1)?;
                m.end()
            }
        }
        struct Terms<'a>(&'a BTreeMap<MultiIndex, LaurentPoly>);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for (i, c) in self.0 {
                    seq.serialize_element(&Term(i, c))?;
                }
                seq.end()
            }
        }
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("n", &self.n)?;
        m.serialize_entry("r", &self.r)?;
        m.serialize_entry("terms", &Terms(&self.terms))?;
        m.end()
    }
}

/// A linear operator on `Omega^{⊗r}`, stored by its columns on the basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Operator {
    n: usize,
    r: usize,
    cols: BTreeMap<MultiIndex, TensorVector>,
}

impl Operator {
    pub fn from_fn(n: usize, r: usize, f: impl Fn(&MultiIndex) -> TensorVector) -> Self {
        let cols = MultiIndex::all(n, r).into_iter().map(|i| {
            let v = f(&i);
            (i, v)
        });
        Self {
            n,
            r,
            cols: cols.collect(),
        }
    }

    pub fn identity(n: usize, r: usize) -> Self {
        Self::from_fn(n, r, |i| TensorVector::basis(n, i))
    }

    pub fn zero(n: usize, r: usize) -> Self {
        Self::from_fn(n, r, |_| TensorVector::zero(n, r))
    }

    pub fn column(&self, i: &MultiIndex) -> &TensorVector {
        &self.cols[i]
    }

    pub fn apply(&self, v: &TensorVector) -> TensorVector {
        v.map(|i| self.cols[i].clone())
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Self) -> Self {
        Self::from_fn(self.n, self.r, |i| self.apply(&other.cols[i]))
    }

    /// `self ∘ self ∘ ... ∘ self`.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.n, self.r), |acc, _| acc.compose(self))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.n, self.r, |i| self.cols[i].add(&other.cols[i]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(self.n, self.r, |i| self.cols[i].sub(&other.cols[i]))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_fn(self.n, self.r, |i| self.cols[i].scale(c))
    }
}
