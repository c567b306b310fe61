//! Triangular monomials `m(A)` and the leading-term statements they rest on.

use crate::error::{Error, Result};
use crate::weyl::{bounded_compositions, e_theta, Composition, ThetaMatrix};

use super::formulas::{generator_matrix, shift_matrix, Kind};
use super::order::strictly_less;
use super::{SchurAlgebra, SchurElement};

/// The index set `{(i, h, j) : 1 <= j <= h < i <= size}` in the order used
/// for the monomial: by `i`, then `j`, then decreasing `h`.
pub fn tcal(size: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 2..=size {
        for j in 1..i {
            for h in (j..i).rev() {
                out.push((i, h, j));
            }
        }
    }
    out
}

fn diag_matrix(v: &[i64], label: &ThetaMatrix) -> Result<ThetaMatrix> {
    if v.iter().any(|&x| x < 0) {
        return Err(Error::NegativeDiagonal(format!("{label:?}")));
    }
    let d: Vec<u32> = v.iter().map(|&x| x as u32).collect();
    ThetaMatrix::diag(&d)
}

/// Factors `D_{i,h,j} + a_{ij} E^theta_{h+1,h}` of `m(A)`, left to right.
/// The diagonals are fixed from the right so that neighbouring factors have
/// matching column and row sums.
pub fn monomial_factors(a: &ThetaMatrix) -> Result<Vec<ThetaMatrix>> {
    let n = a.n();
    let order = tcal(a.size());
    let mut factors: Vec<ThetaMatrix> = Vec::with_capacity(order.len());
    let mut target: Vec<i64> = a.co().into_iter().map(i64::from).collect();
    for &(i, h, j) in order.iter().rev() {
        let x = a.get(i, j) as i64;
        let d: Vec<i64> = target
            .iter()
            .zip(e_theta(n, h))
            .map(|(t, e)| t - x * e)
            .collect();
        let f = diag_matrix(&d, a)?
            .add_e_theta(h + 1, h, x)
            .expect("adding a nonnegative multiple");
        target = f.ro().into_iter().map(i64::from).collect();
        factors.push(f);
    }
    factors.reverse();
    Ok(factors)
}

/// The triangular monomial `m(A)`.
pub fn triangular_monomial(alg: &SchurAlgebra, a: &ThetaMatrix) -> Result<SchurElement> {
    let factors: Vec<SchurElement> = monomial_factors(a)?
        .iter()
        .map(SchurElement::basis)
        .collect();
    alg.product_all(&factors)
}

/// Every way of lowering the middle-generator factors of `m(A)` by
/// `0 <= s <= a_{ij}`, not all zero; the lost units move to the diagonal.
pub fn middle_reductions(a: &ThetaMatrix) -> Result<Vec<Vec<ThetaMatrix>>> {
    let n = a.n();
    let order = tcal(a.size());
    let factors = monomial_factors(a)?;
    let slots: Vec<usize> = (0..order.len())
        .filter(|&k| order[k].1 == n && a.get(order[k].0, order[k].2) > 0)
        .collect();
    let bounds: Vec<u32> = slots
        .iter()
        .map(|&k| a.get(order[k].0, order[k].2))
        .collect();
    let total: u32 = bounds.iter().sum();
    let mut out = Vec::new();
    for t in 1..=total {
        for s in bounded_compositions(t, &bounds) {
            let mut fs = factors.clone();
            for (&k, &sk) in slots.iter().zip(&s) {
                if sk == 0 {
                    continue;
                }
                let mv = sk as i64;
                fs[k] = shift_matrix(&fs[k], &[(n + 1, n, -mv), (n, n, mv)])
                    .expect("s is bounded by the entry");
            }
            out.push(fs);
        }
    }
    Ok(out)
}

/// Dominance of weak compositions: prefix sums of `a` never exceed those of `b`.
pub fn dominated(a: &[u32], b: &[u32]) -> bool {
    let (mut x, mut y) = (0u32, 0u32);
    a.iter().zip(b).all(|(p, q)| {
        x += p;
        y += q;
        x <= y
    })
}

/// Least (`least = true`) or largest element under dominance of the
/// compositions of `m` bounded by `row`, if it exists.
pub fn dominance_extreme(m: u32, row: &[u32], least: bool) -> Option<Vec<u32>> {
    let all = bounded_compositions(m, row);
    all.iter()
        .find(|c| {
            all.iter().all(|d| {
                if least {
                    dominated(c, d)
                } else {
                    dominated(d, c)
                }
            })
        })
        .cloned()
}

/// Which leading-term statement a case comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeadingRule {
    /// Raising `E^theta_{h,h+1}` into an empty tail of row `h`.
    Raise,
    /// Lowering `E^theta_{h+1,h}` from the first nonzero entry of row `h`.
    Lower,
    /// The middle generator, moving `m` units from `(n, k)` to `(n+1, k)`.
    Middle,
}

/// One instance of a leading-term statement.
#[derive(Debug, Clone)]
pub struct LeadingCase {
    pub rule: LeadingRule,
    pub h: usize,
    pub m: u32,
    pub k: usize,
    pub left: ThetaMatrix,
    pub right: ThetaMatrix,
    pub leading: ThetaMatrix,
}

fn lambda_from(a: &ThetaMatrix, m: u32, i: usize) -> Option<Composition> {
    let n = a.n();
    let e = e_theta(n, i);
    let hat: Vec<i64> = a
        .ro()
        .iter()
        .zip(e)
        .map(|(&x, y)| x as i64 - m as i64 * y)
        .collect();
    if hat.iter().any(|&x| x < 0) {
        return None;
    }
    Composition::new(hat[..n].iter().map(|&x| x as u32).collect()).ok()
}

/// All leading-term cases whose hypotheses hold for `A` and divided power `m`.
pub fn leading_cases(a: &ThetaMatrix, m: u32) -> Vec<LeadingCase> {
    let n = a.n();
    let s = a.size();
    let mut out = Vec::new();
    for h in 1..n {
        let row_h: Vec<u32> = (1..=s).map(|j| a.get(h, j)).collect();
        let row_h1: Vec<u32> = (1..=s).map(|j| a.get(h + 1, j)).collect();
        // Raise: k is the last nonzero column of row h+1, row h vanishes from k on.
        if let Some(k) = (1..=s).rev().find(|&j| row_h1[j - 1] > 0) {
            if (k..=s).all(|j| row_h[j - 1] == 0) {
                if let (Some(lambda), Some(nu)) = (
                    lambda_from(a, m, h + 1),
                    dominance_extreme(m, &row_h1, true),
                ) {
                    let moves: Vec<(usize, usize, i64)> = (1..=s)
                        .flat_map(|j| [(h, j, nu[j - 1] as i64), (h + 1, j, -(nu[j - 1] as i64))])
                        .collect();
                    out.push(LeadingCase {
                        rule: LeadingRule::Raise,
                        h,
                        m,
                        k,
                        left: generator_matrix(Kind::Raise, h, m, &lambda),
                        right: a.clone(),
                        leading: shift_matrix(a, &moves).expect("nu bounded by the row"),
                    });
                }
            }
        }
        // Lower: k is the first nonzero column of row h, row h+1 vanishes up to k.
        if let Some(k) = (1..=s).find(|&j| row_h[j - 1] > 0) {
            if (1..=k).all(|j| row_h1[j - 1] == 0) {
                if let (Some(lambda), Some(nu)) =
                    (lambda_from(a, m, h), dominance_extreme(m, &row_h, false))
                {
                    let moves: Vec<(usize, usize, i64)> = (1..=s)
                        .flat_map(|j| [(h + 1, j, nu[j - 1] as i64), (h, j, -(nu[j - 1] as i64))])
                        .collect();
                    out.push(LeadingCase {
                        rule: LeadingRule::Lower,
                        h,
                        m,
                        k,
                        left: generator_matrix(Kind::Lower, h, m, &lambda),
                        right: a.clone(),
                        leading: shift_matrix(a, &moves).expect("nu bounded by the row"),
                    });
                }
            }
        }
    }
    let row_n: Vec<u32> = (1..=s).map(|j| a.get(n, j)).collect();
    if let Some(k) = (1..=s).find(|&j| row_n[j - 1] > 0) {
        let tail_clear = (2 * n + 1 - k..=s).all(|j| row_n[j - 1] == 0);
        if k <= n && row_n[k - 1] >= m && tail_clear {
            if let Some(lambda) = lambda_from(a, m, n) {
                out.push(LeadingCase {
                    rule: LeadingRule::Middle,
                    h: n,
                    m,
                    k,
                    left: generator_matrix(Kind::Theta, n, m, &lambda),
                    right: a.clone(),
                    leading: shift_matrix(a, &[(n + 1, k, m as i64), (n, k, -(m as i64))])
                        .expect("entry is at least m"),
                });
            }
        }
    }
    out
}

/// Outcome of checking one leading-term case against the Hecke model.
#[derive(Debug, Clone)]
pub struct LeadingCheck {
    pub case: LeadingCase,
    pub product: SchurElement,
    /// Whether the designated matrix has coefficient 1.
    pub unit_leading: bool,
    /// Support elements that are not strictly below the leading matrix.
    pub offenders: Vec<ThetaMatrix>,
}

impl LeadingCheck {
    pub fn holds(&self) -> bool {
        self.unit_leading && self.offenders.is_empty()
    }
}

pub fn check_leading(alg: &SchurAlgebra, case: &LeadingCase) -> Result<LeadingCheck> {
    let product = alg.structure_constant(&case.left, &case.right)?;
    let unit_leading = product.coeff(&case.leading).is_one();
    let offenders = product
        .support()
        .into_iter()
        .filter(|b| *b != case.leading && !strictly_less(b, &case.leading))
        .collect();
    Ok(LeadingCheck {
        case: case.clone(),
        product,
        unit_leading,
        offenders,
    })
}
