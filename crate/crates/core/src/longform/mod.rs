//! Long elements `A(j, r)` and their multiplication rules, which do not
//! depend on `r`.
//!
//! Everything here is keyed by the folded weight `j* = (j_1 + j_2n, ...,
//! j_n + j_{n+1})`: `A(j, r)` only sees `j` through it.

mod combination;
pub mod divided;

use crate::error::{Error, Result};
use crate::qarith::{bbracket, LaurentPoly};
use crate::schur::formulas::{beta, beta_prime, c_coefficient, shift_matrix};
use crate::schur::{SchurAlgebra, SchurElement};
use crate::weyl::{Composition, ThetaMatrix};

pub use combination::FormalCombination;

/// `j*` of a weight of length `2n`.
pub fn fold(j: &[i64]) -> Vec<i64> {
    let s = j.len();
    (0..s / 2).map(|i| j[i] + j[s - 1 - i]).collect()
}

/// The weight `(j*, 0^n)`, which has the same long elements as `j`.
pub fn unfold(jstar: &[i64]) -> Vec<i64> {
    let mut out = jstar.to_vec();
    out.resize(2 * jstar.len(), 0);
    out
}

fn check_long(a: &ThetaMatrix, jstar: &[i64]) -> Result<()> {
    if !a.diagonal().iter().all(|&x| x == 0) {
        return Err(Error::InvalidMatrix(format!(
            "long elements need a zero diagonal, got {a:?}"
        )));
    }
    if jstar.len() != a.n() {
        return Err(Error::Parameter(format!(
            "folded weight {jstar:?} should have {} entries",
            a.n()
        )));
    }
    Ok(())
}

/// `A(j, r) = sum_lambda v^{lambda . j*} [A + diag(lambda hat)]` over
/// `lambda` in `Lambda(n, r - |A|/2)`; zero if `|A| > 2r`. Takes `j*`.
pub fn long_element(a: &ThetaMatrix, jstar: &[i64], r: usize) -> Result<SchurElement> {
    check_long(a, jstar)?;
    let n = a.n();
    let half = a.total() as usize / 2;
    let mut out = SchurElement::zero(n, r);
    if half > r {
        return Ok(out);
    }
    for lambda in Composition::all(n, r - half) {
        let e: i64 = lambda
            .parts
            .iter()
            .zip(jstar)
            .map(|(&l, &j)| l as i64 * j)
            .sum();
        let hat: Vec<i64> = lambda.hat().into_iter().map(i64::from).collect();
        let b = a.add_diag(&hat).expect("adding a nonnegative diagonal");
        out.add_term(&b, &LaurentPoly::v_pow(e as i32));
    }
    Ok(out)
}

/// `A(j, r)` for an unfolded weight of length `2n`.
pub fn long_element_full(a: &ThetaMatrix, j: &[i64], r: usize) -> Result<SchurElement> {
    if j.len() != a.size() {
        return Err(Error::Parameter(format!(
            "weight {j:?} should have {} entries",
            a.size()
        )));
    }
    long_element(a, &fold(j), r)
}

/// Generators acting on long elements from the left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LongGen {
    /// `O(j)`, given by `j*`.
    O(Vec<i64>),
    /// `E^theta_{h,h+1}(0)`, the image of `f_h`.
    Raise(usize),
    /// `E^theta_{h+1,h}(0)`, the image of `e_h`.
    Lower(usize),
    /// `E^theta_{n+1,n}(0)`; `t` maps to this plus `O(-e_n)`.
    Middle,
}

impl LongGen {
    /// `d_j`, `1 <= j <= n`.
    pub fn d(n: usize, j: usize) -> Self {
        let mut w = vec![0; n];
        w[j - 1] = -1;
        LongGen::O(w)
    }

    fn check(&self, n: usize) -> Result<()> {
        match self {
            LongGen::O(j) if j.len() != n => Err(Error::Parameter(format!(
                "folded weight {j:?} should have {n} entries"
            ))),
            LongGen::Raise(h) | LongGen::Lower(h) if *h == 0 || *h >= n => {
                Err(Error::Parameter(format!("h = {h} outside [1, {})", n)))
            }
            _ => Ok(()),
        }
    }

    /// The long element this generator stands for, as a combination.
    pub fn as_combination(&self, n: usize) -> Result<FormalCombination> {
        self.check(n)?;
        let z = ThetaMatrix::zero(n);
        let zero = vec![0; n];
        let one = LaurentPoly::one();
        Ok(match self {
            LongGen::O(j) => FormalCombination::single(&z, j, one),
            LongGen::Raise(h) => FormalCombination::single(&e_matrix(n, *h, *h + 1, 1), &zero, one),
            LongGen::Lower(h) => FormalCombination::single(&e_matrix(n, *h + 1, *h, 1), &zero, one),
            LongGen::Middle => FormalCombination::single(&e_matrix(n, n + 1, n, 1), &zero, one),
        })
    }

    /// Its value in `S(n, r)`.
    pub fn element(&self, n: usize, r: usize) -> Result<SchurElement> {
        self.as_combination(n)?.evaluate(r)
    }
}

/// `m E^theta_{ij}` as a zero-diagonal matrix.
pub fn e_matrix(n: usize, i: usize, j: usize, m: u32) -> ThetaMatrix {
    ThetaMatrix::zero(n)
        .add_e_theta(i, j, m as i64)
        .expect("nonnegative multiple")
}

fn vpow(e: i64) -> LaurentPoly {
    LaurentPoly::v_pow(e as i32)
}

fn shifted(j: &[i64], moves: &[(usize, i64)]) -> Vec<i64> {
    let mut out = j.to_vec();
    for &(i, d) in moves {
        out[i - 1] += d;
    }
    out
}

fn dot(a: &[u32], j: &[i64]) -> i64 {
    a.iter().zip(j).map(|(&x, &y)| x as i64 * y).sum()
}

/// `gen * A(j*)` by the long multiplication rules.
pub fn long_mul_symbolic(
    gen: &LongGen,
    a: &ThetaMatrix,
    jstar: &[i64],
) -> Result<FormalCombination> {
    check_long(a, jstar)?;
    let n = a.n();
    gen.check(n)?;
    let s = a.size();
    let mut out = FormalCombination::zero(n);
    match gen {
        LongGen::O(j) => {
            let c = vpow(dot(&a.ro()[..n], j));
            let sum: Vec<i64> = j.iter().zip(jstar).map(|(x, y)| x + y).collect();
            out.add_term(a, &sum, &c);
        }
        LongGen::Raise(h) => {
            let h = *h;
            // alpha_h and alpha^-_h in folded coordinates.
            let plus = shifted(jstar, &[(h, 1), (h + 1, -1)]);
            let minus = shifted(jstar, &[(h, -1), (h + 1, -1)]);
            for p in 1..=s {
                if p == h || p == h + 1 || a.get(h + 1, p) == 0 {
                    continue;
                }
                let c = vpow(beta(a, h, p)) * bbracket(a.get(h, p) as i64 + 1).bar();
                let b = shift_matrix(a, &[(h, p, 1), (h + 1, p, -1)]).expect("entry checked");
                out.add_term(&b, if p < h { &plus } else { jstar }, &c);
            }
            let mut frac = FormalCombination::zero(n);
            if a.get(h + 1, h) >= 1 {
                let b = shift_matrix(a, &[(h + 1, h, -1)]).expect("entry checked");
                let c = vpow(beta(a, h, h) - jstar[h - 1]);
                frac.add_term(&b, &plus, &c);
                frac.add_term(&b, &minus, &-c);
            }
            let c = vpow(beta(a, h, h + 1) + jstar[h]) * bbracket(a.get(h, h + 1) as i64 + 1).bar();
            let b = shift_matrix(a, &[(h, h + 1, 1)]).expect("adding");
            out.add_term(&b, jstar, &c);
            out = out.add(&frac.scale(&LaurentPoly::one(), &[1]));
        }
        LongGen::Lower(h) => {
            let h = *h;
            let back = shifted(jstar, &[(h, -1), (h + 1, 1)]);
            let minus = shifted(jstar, &[(h, -1), (h + 1, -1)]);
            for p in 1..=s {
                if p == h || p == h + 1 || a.get(h, p) == 0 {
                    continue;
                }
                let c = vpow(beta_prime(a, h, p)) * bbracket(a.get(h + 1, p) as i64 + 1).bar();
                let b = shift_matrix(a, &[(h, p, -1), (h + 1, p, 1)]).expect("entry checked");
                out.add_term(&b, if p < h { jstar } else { &back }, &c);
            }
            let c = vpow(beta_prime(a, h, h) + jstar[h - 1])
                * bbracket(a.get(h + 1, h) as i64 + 1).bar();
            let b = shift_matrix(a, &[(h + 1, h, 1)]).expect("adding");
            out.add_term(&b, jstar, &c);
            let mut frac = FormalCombination::zero(n);
            if a.get(h, h + 1) >= 1 {
                let b = shift_matrix(a, &[(h, h + 1, -1)]).expect("entry checked");
                let c = vpow(beta_prime(a, h, h + 1) - jstar[h]);
                frac.add_term(&b, &back, &c);
                frac.add_term(&b, &minus, &-c);
            }
            out = out.add(&frac.scale(&LaurentPoly::one(), &[1]));
        }
        LongGen::Middle => {
            for i in 1..=s {
                if i == n || i == n + 1 || a.get(n, i) == 0 {
                    continue;
                }
                let eps = i64::from(i > n);
                let c =
                    vpow(beta_prime(a, n, i) - eps) * bbracket(a.get(n + 1, i) as i64 + 1).bar();
                let b = shift_matrix(a, &[(n, i, -1), (n + 1, i, 1)]).expect("entry checked");
                out.add_term(&b, jstar, &c);
            }
            let c = vpow(beta_prime(a, n, n) + jstar[n - 1])
                * bbracket(a.get(n + 1, n) as i64 + 1).bar();
            let b = shift_matrix(a, &[(n + 1, n, 1)]).expect("adding");
            out.add_term(&b, jstar, &c);
            out.add_term(a, &shifted(jstar, &[(n, -1)]), &c_coefficient(a));
            let mut frac = FormalCombination::zero(n);
            if a.get(n, n + 1) >= 1 {
                let b = shift_matrix(a, &[(n, n + 1, -1)]).expect("entry checked");
                let c = vpow(beta_prime(a, n, n + 1) - jstar[n - 1]);
                frac.add_term(&b, jstar, &c);
                frac.add_term(&b, &shifted(jstar, &[(n, -2)]), &-c);
            }
            out = out.add(&frac.scale(&LaurentPoly::one(), &[1]));
        }
    }
    Ok(out)
}

/// `A(j*) * O(j)` by the right-hand version of the diagonal rule.
pub fn right_mul_o(a: &ThetaMatrix, jstar: &[i64], j: &[i64]) -> Result<FormalCombination> {
    check_long(a, jstar)?;
    if j.len() != a.n() {
        return Err(Error::Parameter(format!(
            "folded weight {j:?} should have {} entries",
            a.n()
        )));
    }
    let c = vpow(dot(&a.co()[..a.n()], j));
    let sum: Vec<i64> = j.iter().zip(jstar).map(|(x, y)| x + y).collect();
    Ok(FormalCombination::single(a, &sum, c))
}

/// `gen * X`, term by term.
pub fn left_mul(gen: &LongGen, x: &FormalCombination) -> Result<FormalCombination> {
    let n = x.n();
    let mut acc = FormalCombination::zero(n);
    let den = x.denominator_list();
    for ((a, j), c) in x.terms() {
        acc = acc.add(&long_mul_symbolic(gen, a, j)?.scale(c, &den));
    }
    Ok(acc)
}

/// `gen(r) * A(j*, r)` computed in `S(n, r)` through the Hecke model.
pub fn long_mul_evaluated(
    gen: &LongGen,
    a: &ThetaMatrix,
    jstar: &[i64],
    r: usize,
) -> Result<SchurElement> {
    check_long(a, jstar)?;
    let alg = SchurAlgebra::get(a.n(), r)?;
    alg.product(&gen.element(a.n(), r)?, &long_element(a, jstar, r)?)
}

/// Outcome of one rule instance at one `r`.
#[derive(Debug, Clone)]
pub struct RuleCheck {
    pub gen: LongGen,
    pub a: ThetaMatrix,
    pub jstar: Vec<i64>,
    pub r: usize,
    pub holds: bool,
}

/// Compares both sides of the rule for `gen * A(j*)` at each `r`.
pub fn verify_r_stability(
    gen: &LongGen,
    a: &ThetaMatrix,
    jstar: &[i64],
    rs: &[usize],
) -> Result<Vec<RuleCheck>> {
    let rhs = long_mul_symbolic(gen, a, jstar)?;
    rs.iter()
        .map(|&r| {
            if 2 * r < a.total() as usize {
                return Err(Error::Parameter(format!(
                    "r = {r} is below |A| / 2 = {}",
                    a.total() / 2
                )));
            }
            let holds = long_mul_evaluated(gen, a, jstar, r)? == rhs.evaluate(r)?;
            Ok(RuleCheck {
                gen: gen.clone(),
                a: a.clone(),
                jstar: jstar.to_vec(),
                r,
                holds,
            })
        })
        .collect()
}

/// Zero-diagonal matrices with `|A| <= 2 * half_max`.
pub fn zero_diagonal_matrices(n: usize, half_max: usize) -> Vec<ThetaMatrix> {
    (0..=half_max)
        .flat_map(|k| ThetaMatrix::all(n, k))
        .filter(|a| a.diagonal().iter().all(|&x| x == 0))
        .collect()
}

/// All folded weights with entries in `lo..=hi`.
pub fn weight_grid(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<i64>| {
                (lo..=hi).map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}
