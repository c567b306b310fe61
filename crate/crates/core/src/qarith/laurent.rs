use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

/// Element of `Z[v, v^-1]`.
///
/// Terms are kept sorted by exponent with zero coefficients removed, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i32, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * v^exp`.
    pub fn monomial(exp: i32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: vec![(exp, c)],
        }
    }

    /// `v^exp`.
    pub fn v_pow(exp: i32) -> Self {
        Self::monomial(exp, 1)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// merging repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut acc: BTreeMap<i32, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_default() += c.into();
        }
        Self {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Coefficient of `v^exp`.
    pub fn coeff(&self, exp: i32) -> BigInt {
        match self.terms.binary_search_by_key(&exp, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    /// If `self = c * v^e`, returns `(e, c)`.
    pub fn as_monomial(&self) -> Option<(i32, &BigInt)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((*e, c)),
            _ => None,
        }
    }

    /// The ring involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| (-e, c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder (or the divisor is zero).
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((e, c)) = divisor.as_monomial() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (x, a) in &self.terms {
                if !(a % c).is_zero() {
                    return None;
                }
                terms.push((x - e, a / c));
            }
            return Some(Self { terms });
        }
        // Both sides become ordinary polynomials with nonzero constant term
        // after factoring out their lowest powers of v.
        let a_lo = self.terms[0].0;
        let d_lo = divisor.terms[0].0;
        let mut rem = dense(&self.terms, a_lo);
        let den = dense(&divisor.terms, d_lo);
        let m = den.len() - 1;
        if rem.len() <= m {
            return None;
        }
        let lead = &den[m];
        let mut quot = vec![BigInt::zero(); rem.len() - m];
        for k in (m..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            if !(&rem[k] % lead).is_zero() {
                return None;
            }
            let q = &rem[k] / lead;
            for (i, d) in den.iter().enumerate() {
                if !d.is_zero() {
                    rem[k - m + i] -= &q * d;
                }
            }
            quot[k - m] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(quot, a_lo - d_lo))
    }

    fn from_dense(coeffs: Vec<BigInt>, lo: i32) -> Self {
        Self {
            terms: coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i32, c))
                .collect(),
        }
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Self { terms: out }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some((e, c)) = other.as_monomial() {
            return self.scale(c).shift(e);
        }
        if let Some((e, c)) = self.as_monomial() {
            return other.scale(c).shift(e);
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.terms.last().unwrap().0 + other.terms.last().unwrap().0;
        let mut buf = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                buf[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        Self::from_dense(buf, lo)
    }
}

fn dense(terms: &[(i32, BigInt)], lo: i32) -> Vec<BigInt> {
    let hi = terms.last().unwrap().0;
    let mut out = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (e, c) in terms {
        out[(e - lo) as usize] = c.clone();
    }
    out
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::from_int(c)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(self, rhs)
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(&self, &rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(&self, rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &LaurentPoly, b: &LaurentPoly| a
    .add_signed(b, false));
binop!(Sub, sub, |a: &LaurentPoly, b: &LaurentPoly| a
    .add_signed(b, true));
binop!(Mul, mul, |a: &LaurentPoly, b: &LaurentPoly| a.mul_ref(b));

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.add_signed(rhs, false);
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self = self.add_signed(&rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.add_signed(rhs, true);
    }
}

impl SubAssign<LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self = self.add_signed(&rhs, true);
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.mul_ref(rhs);
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_mag = !mag.is_one() || *e == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match *e {
                0 => {}
                1 => write!(f, "v")?,
                e => write!(f, "v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

struct Coeff<'a>(&'a BigInt);

impl Serialize for Coeff<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        // Coefficients beyond i64 are written as decimal strings.
        match self.0.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct Coeffs<'a>(&'a [(i32, BigInt)]);

impl Serialize for Coeffs<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (e, c) in self.0 {
            m.serialize_entry(&e.to_string(), &Coeff(c))?;
        }
        m.end()
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(1))?;
        m.serialize_entry("v", &Coeffs(&self.terms))?;
        m.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawCoeff {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoly {
    v: BTreeMap<String, RawCoeff>,
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawPoly::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.v.len());
        for (k, c) in raw.v {
            let e: i32 = k
                .trim()
                .parse()
                .map_err(|_| de::Error::custom(format!("bad exponent key {k:?}")))?;
            let c = match c {
                RawCoeff::Int(x) => BigInt::from(x),
                RawCoeff::Text(t) => t
                    .parse::<BigInt>()
                    .map_err(|_| de::Error::custom(format!("bad coefficient {t:?}")))?,
            };
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(t: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(t.iter().copied())
    }

    #[test]
    fn zero_terms_are_dropped() {
        let p = lp(&[(1, 2), (1, -2), (0, 0)]);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero());
    }

    #[test]
    fn multiplication_and_bar() {
        let a = lp(&[(1, 1), (-1, -1)]);
        let sq = &a * &a;
        assert_eq!(sq, lp(&[(2, 1), (0, -2), (-2, 1)]));
        assert_eq!(a.bar(), -&a);
    }

    #[test]
    fn exact_division() {
        let a = lp(&[(1, 1), (-1, -1)]);
        let b = lp(&[(3, 1), (-3, -1)]);
        assert_eq!(b.div_exact(&a), Some(lp(&[(2, 1), (0, 1), (-2, 1)])));
        assert_eq!(a.div_exact(&b), None);
        assert_eq!(lp(&[(0, 3)]).div_exact(&lp(&[(2, 2)])), None);
        assert_eq!(lp(&[(4, 6)]).div_exact(&lp(&[(1, 3)])), Some(lp(&[(3, 2)])));
    }

    #[test]
    fn json_round_trip() {
        let p = lp(&[(2, 1), (-2, 1), (0, -2)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"v":{"-2":1,"0":-2,"2":1}}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(
            serde_json::to_string(&LaurentPoly::zero()).unwrap(),
            r#"{"v":{}}"#
        );
    }

    #[test]
    fn big_coefficients_survive_json() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = LaurentPoly::monomial(3, big);
        let s = serde_json::to_string(&p).unwrap();
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(1, 1), (-1, -1)]).to_string(), "v - v^-1");
        assert_eq!(lp(&[(0, -2), (2, 3)]).to_string(), "3v^2 - 2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
