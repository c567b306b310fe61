use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::qarith::LaurentPoly;
use crate::schur::SchurElement;
use crate::weyl::ThetaMatrix;

use super::long_element;

/// `v^i - v^-i`.
fn vdiff(i: u32) -> LaurentPoly {
    LaurentPoly::v_pow(i as i32) - LaurentPoly::v_pow(-(i as i32))
}

/// A combination `sum c_{A,j} A(j)` of long elements with coefficients in
/// `Q(v)`, stored over a common denominator `prod_i (v^i - v^-i)^{k_i}`.
/// Keys use the folded weight `j*` of length `n`.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalCombination {
    n: usize,
    denom: BTreeMap<u32, u32>,
    terms: BTreeMap<(ThetaMatrix, Vec<i64>), LaurentPoly>,
}

impl FormalCombination {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            denom: BTreeMap::new(),
            terms: BTreeMap::new(),
        }
    }

    /// `c A(j*)`.
    pub fn single(a: &ThetaMatrix, jstar: &[i64], c: LaurentPoly) -> Self {
        let mut f = Self::zero(a.n());
        f.add_term(a, jstar, &c);
        f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiset `{i: k_i}` of the denominator factors `(v^i - v^-i)^{k_i}`.
    pub fn denominator_factors(&self) -> &BTreeMap<u32, u32> {
        &self.denom
    }

    /// Denominator factors with repetition, as accepted by [`Self::scale`].
    pub fn denominator_list(&self) -> Vec<u32> {
        self.denom
            .iter()
            .flat_map(|(&i, &k)| std::iter::repeat_n(i, k as usize))
            .collect()
    }

    pub fn denominator(&self) -> LaurentPoly {
        self.denom.iter().map(|(&i, &k)| vdiff(i).pow(k)).product()
    }

    /// Terms as `((A, j*), numerator)`.
    pub fn terms(&self) -> impl Iterator<Item = (&(ThetaMatrix, Vec<i64>), &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    /// Numerator of the coefficient of `A(j*)`.
    pub fn numerator(&self, a: &ThetaMatrix, jstar: &[i64]) -> LaurentPoly {
        self.terms
            .get(&(a.clone(), jstar.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// Adds `num / denominator * A(j*)`, numerator relative to the current
    /// denominator.
    pub fn add_term(&mut self, a: &ThetaMatrix, jstar: &[i64], num: &LaurentPoly) {
        assert_eq!(a.n(), self.n, "long element of the wrong size");
        assert_eq!(jstar.len(), self.n, "folded weight of the wrong length");
        if num.is_zero() {
            return;
        }
        let key = (a.clone(), jstar.to_vec());
        let e = self.terms.entry(key.clone()).or_default();
        *e += num;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn multiply_numerators(&mut self, c: &LaurentPoly) {
        for x in self.terms.values_mut() {
            *x = &*x * c;
        }
        self.terms.retain(|_, x| !x.is_zero());
    }

    /// Rewrites over the denominator `target`, which must contain ours.
    fn lift_to(&self, target: &BTreeMap<u32, u32>) -> Self {
        let mut extra = LaurentPoly::one();
        for (&i, &k) in target {
            let have = self.denom.get(&i).copied().unwrap_or(0);
            extra *= &vdiff(i).pow(k - have);
        }
        let mut out = self.clone();
        out.denom = target.clone();
        out.multiply_numerators(&extra);
        out
    }

    fn common_denominator(&self, other: &Self) -> BTreeMap<u32, u32> {
        let mut d = self.denom.clone();
        for (&i, &k) in &other.denom {
            let e = d.entry(i).or_insert(0);
            *e = (*e).max(k);
        }
        d
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let d = self.common_denominator(other);
        let mut out = self.lift_to(&d);
        for ((a, j), c) in other.lift_to(&d).terms {
            out.add_term(&a, &j, &c);
        }
        out.simplify();
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&LaurentPoly::from_int(-1), &[]))
    }

    /// Multiplies by `num / prod (v^i - v^-i)` over the listed `i`.
    pub fn scale(&self, num: &LaurentPoly, den: &[u32]) -> Self {
        let mut out = self.clone();
        out.multiply_numerators(num);
        for &i in den {
            *out.denom.entry(i).or_insert(0) += 1;
        }
        out.simplify();
        out
    }

    /// Cancels denominator factors dividing every numerator.
    pub fn simplify(&mut self) {
        if self.terms.is_empty() {
            self.denom.clear();
            return;
        }
        let factors: Vec<u32> = self.denom.keys().copied().collect();
        for i in factors {
            let d = vdiff(i);
            while self.denom.get(&i).copied().unwrap_or(0) > 0 {
                let divided: Option<Vec<LaurentPoly>> =
                    self.terms.values().map(|x| x.div_exact(&d)).collect();
                match divided {
                    Some(vals) => {
                        for (x, y) in self.terms.values_mut().zip(vals) {
                            *x = y;
                        }
                        *self.denom.get_mut(&i).unwrap() -= 1;
                    }
                    None => break,
                }
            }
        }
        self.denom.retain(|_, k| *k > 0);
    }

    /// Equality as elements over `Q(v)`.
    pub fn same_as(&self, other: &Self) -> bool {
        self.n == other.n && {
            let d = self.common_denominator(other);
            self.lift_to(&d).terms == other.lift_to(&d).terms
        }
    }

    /// Coefficient of `A(j*)` if it is a Laurent polynomial.
    pub fn laurent_coeff(&self, a: &ThetaMatrix, jstar: &[i64]) -> Option<LaurentPoly> {
        self.numerator(a, jstar).div_exact(&self.denominator())
    }

    /// The element of `S(n, r)` this combination names.
    pub fn evaluate(&self, r: usize) -> Result<SchurElement> {
        let mut acc = SchurElement::zero(self.n, r);
        for ((a, j), c) in &self.terms {
            let x = long_element(a, j, r)?;
            acc = acc.add(&x.scale(c))?;
        }
        acc.div_exact(&self.denominator()).map_err(|e| match e {
            Error::InexactDivision(msg) => Error::InexactDivision(format!(
                "long combination does not evaluate integrally at r = {r}: {msg}"
            )),
            other => other,
        })
    }
}

impl fmt::Debug for FormalCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, ((a, j), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {a:?}{j:?}")?;
        }
        write!(f, ")")?;
        if !self.denom.is_empty() {
            write!(f, " / ")?;
            for (i, k) in &self.denom {
                write!(f, "(v^{i} - v^-{i})^{k}")?;
            }
        }
        Ok(())
    }
}
