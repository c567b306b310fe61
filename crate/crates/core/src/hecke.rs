//! The Hecke algebra of type C over `Z[v, v^-1]` (with `q = v^2`), its
//! permutation modules `x_lambda H`, and the homomorphisms between them
//! indexed by double cosets.

use std::collections::BTreeMap;

use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qarith::LaurentPoly;
use crate::weyl::{Composition, WeylElement, WeylGroup};

/// A finite combination of standard basis elements `T_w`, keyed by the index
/// of `w` in the shared [`WeylGroup`] of the same rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    rank: usize,
    terms: BTreeMap<u32, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// `T_w` for the group element with index `w`.
    pub fn basis(rank: usize, w: u32) -> Self {
        Self::monomial(rank, w, LaurentPoly::one())
    }

    pub fn monomial(rank: usize, w: u32, c: LaurentPoly) -> Self {
        let mut h = Self::zero(rank);
        if !c.is_zero() {
            h.terms.insert(w, c);
        }
        h
    }

    /// `T_w` for an explicit group element.
    pub fn from_element(w: &WeylElement) -> Result<Self> {
        let g = WeylGroup::get(w.rank())?;
        let i = g.index_of(w).expect("every valid element is in the group");
        Ok(Self::basis(w.rank(), i))
    }

    /// Sum of `T_w` over a set of indices.
    pub fn sum_of(rank: usize, set: &[u32]) -> Self {
        Self {
            rank,
            terms: set.iter().map(|&w| (w, LaurentPoly::one())).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: u32) -> LaurentPoly {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> + '_ {
        self.terms.iter().map(|(w, c)| (*w, c))
    }

    pub fn support(&self) -> Vec<u32> {
        self.terms.keys().copied().collect()
    }

    pub fn add_term(&mut self, w: u32, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    fn same_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&LaurentPoly::from_int(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, x) in self.terms() {
            out.add_term(w, &(x * c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        let g = WeylGroup::get(self.rank)?;
        Ok(mul_in(&g, self, other))
    }

    /// Terms as explicit group elements, for display and JSON.
    pub fn named_terms(&self) -> Vec<(WeylElement, LaurentPoly)> {
        let g = WeylGroup::get(self.rank).expect("rank was validated on construction");
        self.terms
            .iter()
            .map(|(&w, c)| (g.element(w).clone(), c.clone()))
            .collect()
    }
}

impl Serialize for HeckeElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Term<'a>(&'a WeylElement, &'a LaurentPoly);
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("w", &self.0.images())?;
                m.serialize_entry("coeff", self.1)?;
                m.end()
            }
        }
        struct Terms<'a>(&'a [(WeylElement, LaurentPoly)]);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for (w, c) in self.0 {
                    seq.serialize_element(&Term(w, c))?;
                }
                seq.end()
            }
        }
        let named = self.named_terms();
        let mut m = s.serialize_map(Some(1))?;
        m.serialize_entry("terms", &Terms(&named))?;
        m.end()
    }
}

/// `T_{s_j} * h`, accumulated into a dense buffer indexed by group element.
fn left_gen_into(g: &WeylGroup, j: usize, h: &[LaurentPoly], out: &mut [LaurentPoly]) {
    let q = LaurentPoly::v_pow(2);
    let q1 = LaurentPoly::from_terms([(2, 1i64), (0, -1)]);
    for (w, c) in h.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let w = w as u32;
        let sw = g.left_gen(j, w);
        if g.length(sw) > g.length(w) {
            out[sw as usize] += c;
        } else {
            out[w as usize] += &q1 * c;
            out[sw as usize] += &q * c;
        }
    }
}

/// `T_x * h` for a dense `h`.
fn basis_times_dense(g: &WeylGroup, x: u32, h: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let mut cur = h.to_vec();
    for &j in g.reduced_word(x).iter().rev() {
        let mut next = vec![LaurentPoly::zero(); cur.len()];
        left_gen_into(g, j, &cur, &mut next);
        cur = next;
    }
    cur
}

fn dense(g: &WeylGroup, h: &HeckeElement) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(); g.len()];
    for (w, c) in h.terms() {
        out[w as usize] = c.clone();
    }
    out
}

fn sparse(rank: usize, d: Vec<LaurentPoly>) -> HeckeElement {
    HeckeElement {
        rank,
        terms: d
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w as u32, c))
            .collect(),
    }
}

pub(crate) fn mul_in(g: &WeylGroup, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
    let bd = dense(g, b);
    let mut acc = vec![LaurentPoly::zero(); g.len()];
    for (x, c) in a.terms() {
        for (w, y) in basis_times_dense(g, x, &bd).into_iter().enumerate() {
            if !y.is_zero() {
                acc[w] += &y * c;
            }
        }
    }
    sparse(a.rank, acc)
}

/// `T_{s_j} * h` with the quadratic relation applied on descents.
pub fn left_generator_mul(j: usize, h: &HeckeElement) -> Result<HeckeElement> {
    let g = WeylGroup::get(h.rank)?;
    if j == 0 || j > h.rank {
        return Err(Error::GeneratorOutOfRange {
            index: j,
            rank: h.rank,
        });
    }
    let mut out = vec![LaurentPoly::zero(); g.len()];
    left_gen_into(&g, j, &dense(&g, h), &mut out);
    Ok(sparse(h.rank, out))
}

/// `x_lambda = sum of T_w over W_lambda`.
pub fn x_lambda(lambda: &Composition) -> Result<HeckeElement> {
    let g = WeylGroup::get(lambda.r())?;
    Ok(HeckeElement::sum_of(lambda.r(), &g.parabolic(lambda)?))
}

/// `T_{W_lambda d W_mu}`, the sum of `T_w` over a double coset.
pub fn double_coset_sum(lambda: &Composition, d: u32, mu: &Composition) -> Result<HeckeElement> {
    let g = WeylGroup::get(lambda.r())?;
    Ok(HeckeElement::sum_of(
        lambda.r(),
        &g.double_coset(lambda, d, mu)?,
    ))
}

/// An element of the right module `x_lambda H`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleElement {
    pub lambda: Composition,
    pub value: HeckeElement,
}

/// Writes `m = sum_d c_d x_lambda T_d` over shortest right coset
/// representatives `d`. Fails if `m` is not in `x_lambda H`.
pub fn module_decompose(
    lambda: &Composition,
    m: &HeckeElement,
) -> Result<BTreeMap<u32, LaurentPoly>> {
    let g = WeylGroup::get(lambda.r())?;
    if m.rank != lambda.r() {
        return Err(Error::RankMismatch {
            left: lambda.r(),
            right: m.rank,
        });
    }
    let gens = lambda.parabolic_generators();
    let mut coeffs = BTreeMap::new();
    for w in m.support() {
        if gens.iter().all(|&j| !g.is_left_descent(j, w)) {
            coeffs.insert(w, m.coeff(w));
        }
    }
    let x = HeckeElement::sum_of(lambda.r(), &g.parabolic(lambda)?);
    let mut residual = dense(&g, m);
    for (&d, c) in &coeffs {
        let xd = mul_in(&g, &x, &HeckeElement::basis(lambda.r(), d));
        for (w, y) in xd.terms() {
            residual[w as usize] -= &(y * c);
        }
    }
    if let Some((w, c)) = residual.iter().enumerate().find(|(_, c)| !c.is_zero()) {
        return Err(Error::Residual(format!(
            "element is not in x_lambda H for lambda = {:?}: T_{:?} keeps coefficient {c}",
            lambda.parts,
            g.element(w as u32)
        )));
    }
    Ok(coeffs)
}

/// Applies the homomorphism `phi^d_{lambda mu}` (sending `x_mu` to
/// `T_{W_lambda d W_mu}` and vanishing on the other summands) to `m`.
pub fn phi_apply(
    lambda: &Composition,
    d: u32,
    mu: &Composition,
    m: &ModuleElement,
) -> Result<HeckeElement> {
    let r = lambda.r();
    if m.lambda != *mu {
        return Ok(HeckeElement::zero(r));
    }
    let g = WeylGroup::get(r)?;
    let coeffs = module_decompose(mu, &m.value)?;
    let mut h = HeckeElement::zero(r);
    for (d2, c) in coeffs {
        h.add_term(d2, &c);
    }
    let coset = HeckeElement::sum_of(r, &g.double_coset(lambda, d, mu)?);
    Ok(mul_in(&g, &coset, &h))
}
