use std::collections::BTreeMap;

use serde::de::Deserializer;
use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qarith::LaurentPoly;
use crate::weyl::ThetaMatrix;

/// A combination of standard basis elements `[A]` of `S(n, r)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchurElement {
    n: usize,
    r: usize,
    terms: BTreeMap<ThetaMatrix, LaurentPoly>,
}

impl SchurElement {
    pub fn zero(n: usize, r: usize) -> Self {
        Self {
            n,
            r,
            terms: BTreeMap::new(),
        }
    }

    /// `[A]`; the ambient `(n, r)` is read off the matrix.
    pub fn basis(a: &ThetaMatrix) -> Self {
        Self::monomial(a, LaurentPoly::one())
    }

    pub fn monomial(a: &ThetaMatrix, c: LaurentPoly) -> Self {
        let mut s = Self::zero(a.n(), a.total() as usize / 2);
        s.add_term(a, &c);
        s
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

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: &ThetaMatrix) -> LaurentPoly {
        self.terms.get(a).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ThetaMatrix, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<ThetaMatrix> {
        self.terms.keys().cloned().collect()
    }

    /// Adds `c [A]`. Panics if `A` lives in a different algebra.
    pub fn add_term(&mut self, a: &ThetaMatrix, c: &LaurentPoly) {
        assert!(
            a.n() == self.n && a.total() as usize == 2 * self.r,
            "matrix {a:?} does not index a basis element of S({}, {})",
            self.n,
            self.r
        );
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(a) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(a);
                }
            }
            None => {
                self.terms.insert(a.clone(), c.clone());
            }
        }
    }

    pub(crate) fn check_ambient(&self, other: &Self) -> Result<()> {
        if (self.n, self.r) != (other.n, other.r) {
            return Err(Error::AmbientMismatch {
                left: (self.n, self.r),
                right: (other.n, other.r),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (a, c) in other.terms() {
            out.add_term(a, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (a, c) in other.terms() {
            out.add_term(a, &-c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.n, self.r);
        for (a, x) in self.terms() {
            out.add_term(a, &(x * c));
        }
        out
    }

    /// Divides every coefficient exactly by `d`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<Self> {
        let mut out = Self::zero(self.n, self.r);
        for (a, x) in self.terms() {
            let y = x.div_exact(d).ok_or_else(|| {
                Error::InexactDivision(format!("coefficient {x} of {a:?} by {d}"))
            })?;
            out.add_term(a, &y);
        }
        Ok(out)
    }

    /// Applies `v -> v^-1` to every coefficient.
    pub fn bar_coefficients(&self) -> Self {
        let mut out = Self::zero(self.n, self.r);
        for (a, x) in self.terms() {
            out.add_term(a, &x.bar());
        }
        out
    }
}

impl Serialize for SchurElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Term<'a>(&'a ThetaMatrix, &'a LaurentPoly);
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("matrix", &self.0.rows())?;
                m.serialize_entry("coeff", self.1)?;
                m.end()
            }
        }
        struct Terms<'a>(&'a BTreeMap<ThetaMatrix, LaurentPoly>);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for (a, c) in self.0 {
                    seq.serialize_element(&Term(a, c))?;
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

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    matrix: Vec<Vec<u32>>,
    coeff: LaurentPoly,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawElement {
    n: usize,
    r: usize,
    terms: Vec<RawTerm>,
}

impl<'de> Deserialize<'de> for SchurElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawElement::deserialize(d)?;
        let mut out = SchurElement::zero(raw.n, raw.r);
        for t in raw.terms {
            let a = ThetaMatrix::from_rows(&t.matrix).map_err(D::Error::custom)?;
            if a.n() != raw.n || a.total() as usize != 2 * raw.r {
                return Err(D::Error::custom(format!(
                    "matrix {a:?} is not in the basis of S({}, {})",
                    raw.n, raw.r
                )));
            }
            out.add_term(&a, &t.coeff);
        }
        Ok(out)
    }
}
