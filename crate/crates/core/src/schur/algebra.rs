use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::hecke::{self, HeckeElement, ModuleElement};
use crate::qarith::LaurentPoly;
use crate::weyl::{Composition, ThetaMatrix, WeylGroup, MAX_RANK};

use super::SchurElement;

/// Largest basis the algebra will enumerate.
pub const BASIS_CAP: usize = 10_000;

/// Data attached to one standard basis element `[A]`, `A <-> (lambda, d, mu)`.
#[derive(Clone, Debug)]
pub struct BasisData {
    pub matrix: ThetaMatrix,
    pub lambda: usize,
    pub d: u32,
    pub mu: usize,
    /// `[A] = v^exponent * phi^d_{lambda mu}`.
    pub exponent: i32,
    /// Elements of `W_lambda d W_mu`.
    pub coset: Vec<u32>,
}

type Row = Arc<Vec<(u32, LaurentPoly)>>;

/// The algebra `S(n, r)`: enumerated basis and a cached structure-constant
/// table computed by the Hecke model.
pub struct SchurAlgebra {
    n: usize,
    r: usize,
    group: Arc<WeylGroup>,
    comps: Vec<Composition>,
    comp_index: HashMap<Composition, usize>,
    basis: Vec<BasisData>,
    index: HashMap<ThetaMatrix, u32>,
    products: RwLock<HashMap<(u32, u32), Row>>,
}

type Registry = Mutex<HashMap<(usize, usize), Arc<SchurAlgebra>>>;

static ALGEBRAS: OnceLock<Registry> = OnceLock::new();

/// `|Xi_{2n, 2r}|`: weak compositions of `r` into `2n^2` parts.
pub fn basis_size(n: usize, r: usize) -> u128 {
    let parts = (2 * n * n) as u128;
    let r = r as u128;
    // C(r + parts - 1, r)
    let mut c: u128 = 1;
    for i in 0..r {
        c = c * (parts + i) / (i + 1);
    }
    c
}

impl SchurAlgebra {
    /// Shared instance for `(n, r)`, built on first use.
    pub fn get(n: usize, r: usize) -> Result<Arc<SchurAlgebra>> {
        let cache = ALGEBRAS.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(a) = cache.lock().unwrap().get(&(n, r)) {
            return Ok(a.clone());
        }
        let a = Arc::new(Self::build(n, r)?);
        Ok(cache.lock().unwrap().entry((n, r)).or_insert(a).clone())
    }

    fn build(n: usize, r: usize) -> Result<Self> {
        if n == 0 || r == 0 {
            return Err(Error::Parameter(format!(
                "need n, r >= 1, got n = {n}, r = {r}"
            )));
        }
        if r > MAX_RANK {
            return Err(Error::RankTooLarge {
                rank: r,
                cap: MAX_RANK,
            });
        }
        let size = basis_size(n, r);
        if size > BASIS_CAP as u128 {
            return Err(Error::BasisTooLarge {
                size: size.min(usize::MAX as u128) as usize,
                cap: BASIS_CAP,
            });
        }
        let group = WeylGroup::get(r)?;
        let comps = Composition::all(n, r);
        let comp_index: HashMap<Composition, usize> = comps
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        let longest: Vec<u32> = comps
            .iter()
            .map(|c| Ok(group.longest(&group.parabolic(c)?)))
            .collect::<Result<_>>()?;
        let mut basis = Vec::new();
        for (li, lambda) in comps.iter().enumerate() {
            for (mi, mu) in comps.iter().enumerate() {
                for d in group.min_double_coset_reps(lambda, mu)? {
                    let matrix = group.matrix_of_triple(lambda, d, mu)?;
                    let coset = group.double_coset(lambda, d, mu)?;
                    let d_plus = group.longest(&coset);
                    let exponent = group.length(longest[mi]) as i32 - group.length(d_plus) as i32;
                    basis.push(BasisData {
                        matrix,
                        lambda: li,
                        d,
                        mu: mi,
                        exponent,
                        coset,
                    });
                }
            }
        }
        basis.sort_by(|a, b| a.matrix.cmp(&b.matrix));
        let index: HashMap<ThetaMatrix, u32> = basis
            .iter()
            .enumerate()
            .map(|(i, b)| (b.matrix.clone(), i as u32))
            .collect();
        if index.len() != basis.len() {
            return Err(Error::InvalidMatrix(
                "two double cosets produced the same matrix".into(),
            ));
        }
        Ok(Self {
            n,
            r,
            group,
            comps,
            comp_index,
            basis,
            index,
            products: RwLock::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn compositions(&self) -> &[Composition] {
        &self.comps
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis matrices in lexicographic order.
    pub fn basis_matrices(&self) -> Vec<ThetaMatrix> {
        self.basis.iter().map(|b| b.matrix.clone()).collect()
    }

    pub fn basis_data(&self, i: u32) -> &BasisData {
        &self.basis[i as usize]
    }

    pub fn index_of(&self, a: &ThetaMatrix) -> Result<u32> {
        self.index.get(a).copied().ok_or_else(|| {
            Error::InvalidMatrix(format!(
                "{a:?} is not a basis matrix of S({}, {})",
                self.n, self.r
            ))
        })
    }

    /// `(lambda, d, mu)` for a basis matrix.
    pub fn triple_of(&self, a: &ThetaMatrix) -> Result<(Composition, u32, Composition)> {
        let b = &self.basis[self.index_of(a)? as usize];
        Ok((self.comps[b.lambda].clone(), b.d, self.comps[b.mu].clone()))
    }

    pub fn composition_index(&self, c: &Composition) -> Option<usize> {
        self.comp_index.get(c).copied()
    }

    /// The unit: sum of the idempotents `[diag(lambda hat)]`.
    pub fn one(&self) -> SchurElement {
        let mut out = SchurElement::zero(self.n, self.r);
        for c in &self.comps {
            let m = ThetaMatrix::diag(&c.hat()).expect("palindrome");
            out.add_term(&m, &LaurentPoly::one());
        }
        out
    }

    /// `[A]` as the Hecke element `phi_A(x_mu)`, unnormalised.
    fn coset_sum(&self, b: &BasisData) -> HeckeElement {
        HeckeElement::sum_of(self.r, &b.coset)
    }

    /// Structure constants of `[A][B]` computed from scratch through the
    /// Hecke model, bypassing the cache.
    pub fn oracle_product(&self, a: u32, b: u32) -> Result<Vec<(u32, LaurentPoly)>> {
        let ba = &self.basis[a as usize];
        let bb = &self.basis[b as usize];
        if ba.mu != bb.lambda {
            return Ok(Vec::new());
        }
        let lambda = &self.comps[ba.lambda];
        let mu = &self.comps[ba.mu];
        let nu = bb.mu;
        let image = ModuleElement {
            lambda: mu.clone(),
            value: self.coset_sum(bb),
        };
        let mut result = hecke::phi_apply(lambda, ba.d, mu, &image)?;
        let mut out = Vec::new();
        for (ci, c) in self.basis.iter().enumerate() {
            if c.lambda != ba.lambda || c.mu != nu {
                continue;
            }
            let g = result.coeff(c.d);
            if g.is_zero() {
                continue;
            }
            result = result.sub(&self.coset_sum(c).scale(&g))?;
            let exp = ba.exponent + bb.exponent - c.exponent;
            out.push((ci as u32, g.shift(exp)));
        }
        if !result.is_zero() {
            return Err(Error::Residual(format!(
                "product of {:?} and {:?} is not a combination of double coset sums",
                ba.matrix, bb.matrix
            )));
        }
        Ok(out)
    }

    /// Cached structure constants of `[A][B]` by basis index.
    pub fn basis_product(&self, a: u32, b: u32) -> Result<Row> {
        if let Some(row) = self.products.read().unwrap().get(&(a, b)) {
            return Ok(row.clone());
        }
        let row = Arc::new(self.oracle_product(a, b)?);
        self.products.write().unwrap().insert((a, b), row.clone());
        Ok(row)
    }

    /// `[A][B]` for basis matrices.
    pub fn structure_constant(&self, a: &ThetaMatrix, b: &ThetaMatrix) -> Result<SchurElement> {
        let row = self.basis_product(self.index_of(a)?, self.index_of(b)?)?;
        let mut out = SchurElement::zero(self.n, self.r);
        for (c, x) in row.iter() {
            out.add_term(&self.basis[*c as usize].matrix, x);
        }
        Ok(out)
    }

    fn check(&self, x: &SchurElement) -> Result<()> {
        if (x.n(), x.r()) != (self.n, self.r) {
            return Err(Error::AmbientMismatch {
                left: (self.n, self.r),
                right: (x.n(), x.r()),
            });
        }
        Ok(())
    }

    /// Bilinear product through the cached structure constants.
    pub fn product(&self, x: &SchurElement, y: &SchurElement) -> Result<SchurElement> {
        self.check(x)?;
        self.check(y)?;
        let mut acc: HashMap<u32, LaurentPoly> = HashMap::new();
        let ys: Vec<(u32, &LaurentPoly, usize)> = y
            .terms()
            .map(|(b, c)| {
                let i = self.index_of(b)?;
                Ok((i, c, self.basis[i as usize].lambda))
            })
            .collect::<Result<_>>()?;
        for (a, ca) in x.terms() {
            let ia = self.index_of(a)?;
            let mu = self.basis[ia as usize].mu;
            for &(ib, cb, lb) in &ys {
                if lb != mu {
                    continue;
                }
                let row = self.basis_product(ia, ib)?;
                if row.is_empty() {
                    continue;
                }
                let cab = ca * cb;
                for (c, g) in row.iter() {
                    *acc.entry(*c).or_default() += &cab * g;
                }
            }
        }
        let mut out = SchurElement::zero(self.n, self.r);
        for (c, g) in acc {
            out.add_term(&self.basis[c as usize].matrix, &g);
        }
        Ok(out)
    }

    /// Left-to-right product of several elements.
    pub fn product_all(&self, xs: &[SchurElement]) -> Result<SchurElement> {
        let mut acc = self.one();
        for x in xs {
            acc = self.product(&acc, x)?;
        }
        Ok(acc)
    }
}

/// `[A][B]` in the algebra containing both matrices.
pub fn product(a: &ThetaMatrix, b: &ThetaMatrix) -> Result<SchurElement> {
    if a.n() != b.n() || a.total() != b.total() {
        return Err(Error::AmbientMismatch {
            left: (a.n(), a.total() as usize / 2),
            right: (b.n(), b.total() as usize / 2),
        });
    }
    SchurAlgebra::get(a.n(), a.total() as usize / 2)?.structure_constant(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u32]]) -> ThetaMatrix {
        ThetaMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn dimensions() {
        for (n, r, dim) in [(1, 1, 2), (1, 2, 3), (2, 1, 8), (2, 2, 36)] {
            assert_eq!(SchurAlgebra::get(n, r).unwrap().dim(), dim);
            assert_eq!(basis_size(n, r), dim as u128);
        }
    }

    #[test]
    fn square_of_the_antidiagonal() {
        let e = m(&[&[0, 1], &[1, 0]]);
        let id = m(&[&[1, 0], &[0, 1]]);
        let p = product(&e, &e).unwrap();
        let mut expected =
            SchurElement::monomial(&e, LaurentPoly::from_terms([(1, 1i64), (-1, -1)]));
        expected.add_term(&id, &LaurentPoly::one());
        assert_eq!(p, expected);
    }

    #[test]
    fn mismatched_profiles_multiply_to_zero() {
        let a = m(&[&[1, 0, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 1]]);
        let b = m(&[&[0, 0, 0, 0], &[1, 0, 0, 1], &[1, 0, 0, 1], &[0, 0, 0, 0]]);
        assert!(product(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn basis_cap() {
        assert!(matches!(
            SchurAlgebra::get(4, 4),
            Err(Error::BasisTooLarge { .. })
        ));
    }
}
