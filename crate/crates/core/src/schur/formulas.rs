//! Closed multiplication formulas for generators and divided powers acting
//! on the standard basis from the left.

use crate::error::{Error, Result};
use crate::qarith::{bbracket, gauss_binom, LaurentPoly};
use crate::weyl::{bounded_compositions, e_theta, Composition, ThetaMatrix};

use super::SchurElement;

/// Which off-diagonal generator multiplies from the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// `E^theta_{h,h+1}`, moves one unit from row `h+1` up to row `h`.
    Raise,
    /// `E^theta_{h+1,h}`, moves one unit from row `h` down to row `h+1`.
    Lower,
    /// `E^theta_{n+1,n}`, the generator straddling the middle.
    Theta,
}

/// `sum_{j >= p} a_{h,j} - sum_{j > p} a_{h+1,j}`.
pub fn beta(a: &ThetaMatrix, h: usize, p: usize) -> i64 {
    let s = a.size();
    let x: i64 = (p..=s).map(|j| a.get(h, j) as i64).sum();
    let y: i64 = (p + 1..=s).map(|j| a.get(h + 1, j) as i64).sum();
    x - y
}

/// `sum_{j <= p} a_{h+1,j} - sum_{j < p} a_{h,j}`.
pub fn beta_prime(a: &ThetaMatrix, h: usize, p: usize) -> i64 {
    let x: i64 = (1..=p).map(|j| a.get(h + 1, j) as i64).sum();
    let y: i64 = (1..p).map(|j| a.get(h, j) as i64).sum();
    x - y
}

/// The diagonal coefficient `c_A` of the middle generator.
pub fn c_coefficient(a: &ThetaMatrix) -> LaurentPoly {
    let n = a.n();
    let x: i64 = (1..=n).map(|j| a.get(n, j) as i64).sum();
    let s: i64 = (1..=n).map(|j| a.get(n + 1, j) as i64).sum();
    (LaurentPoly::v_pow(s as i32) - LaurentPoly::v_pow(-s as i32)).shift(-x as i32)
}

/// Applies `sum delta * E^theta_{ij}`; `None` if an entry goes negative.
pub fn shift_matrix(a: &ThetaMatrix, moves: &[(usize, usize, i64)]) -> Option<ThetaMatrix> {
    let s = a.size();
    let mut rows: Vec<Vec<i64>> = a
        .rows()
        .into_iter()
        .map(|r| r.into_iter().map(i64::from).collect())
        .collect();
    for &(i, j, d) in moves {
        rows[i - 1][j - 1] += d;
        rows[s - i][s - j] += d;
    }
    if rows.iter().flatten().any(|&x| x < 0) {
        return None;
    }
    let rows: Vec<Vec<u32>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as u32).collect())
        .collect();
    ThetaMatrix::from_rows(&rows).ok()
}

fn vpow(e: i64) -> LaurentPoly {
    LaurentPoly::v_pow(e as i32)
}

fn hat_plus(lambda: &Composition, m: i64, i: usize) -> Vec<i64> {
    let n = lambda.n();
    let e = e_theta(n, i);
    lambda
        .hat()
        .iter()
        .zip(e)
        .map(|(&x, y)| x as i64 + m * y)
        .collect()
}

fn ro_i64(a: &ThetaMatrix) -> Vec<i64> {
    a.ro().into_iter().map(i64::from).collect()
}

fn check_inputs(kind: Kind, h: usize, m: u32, lambda: &Composition, a: &ThetaMatrix) -> Result<()> {
    let n = a.n();
    if lambda.n() != n {
        return Err(Error::Parameter(format!(
            "composition {:?} has {} parts but the matrix has n = {n}",
            lambda.parts,
            lambda.n()
        )));
    }
    if 2 * (lambda.r() + m as usize) != a.total() as usize {
        return Err(Error::Parameter(format!(
            "composition {:?} plus {m} does not match |A| / 2 = {}",
            lambda.parts,
            a.total() / 2
        )));
    }
    if m == 0 {
        return Err(Error::Parameter("divided power must be positive".into()));
    }
    match kind {
        Kind::Theta if h != n => Err(Error::Parameter(format!(
            "middle generator sits at h = n = {n}, got h = {h}"
        ))),
        Kind::Raise | Kind::Lower if h == 0 || h >= n => Err(Error::Parameter(format!(
            "h = {h} outside [1, {}]",
            n.saturating_sub(1)
        ))),
        _ => Ok(()),
    }
}

/// Left factor of a short formula: `E^theta + diag(lambda hat)`.
pub fn generator_matrix(kind: Kind, h: usize, m: u32, lambda: &Composition) -> ThetaMatrix {
    let n = lambda.n();
    let base = ThetaMatrix::diag(&lambda.hat()).expect("palindrome");
    let (i, j) = match kind {
        Kind::Raise => (h, h + 1),
        Kind::Lower => (h + 1, h),
        Kind::Theta => (n + 1, n),
    };
    base.add_e_theta(i, j, m as i64).expect("nonnegative")
}

/// `[E^theta + lambda hat] [A]` by the closed formula.
pub fn short_mul(
    kind: Kind,
    h: usize,
    lambda: &Composition,
    a: &ThetaMatrix,
) -> Result<SchurElement> {
    check_inputs(kind, h, 1, lambda, a)?;
    let n = a.n();
    let s = a.size();
    let mut out = SchurElement::zero(n, a.total() as usize / 2);
    let ro = ro_i64(a);
    match kind {
        Kind::Raise => {
            if ro != hat_plus(lambda, 1, h + 1) {
                return Ok(out);
            }
            for p in 1..=s {
                if a.get(h + 1, p) == 0 {
                    continue;
                }
                let c = vpow(beta(a, h, p)) * bbracket(a.get(h, p) as i64 + 1).bar();
                let b = shift_matrix(a, &[(h, p, 1), (h + 1, p, -1)]).expect("entry checked");
                out.add_term(&b, &c);
            }
        }
        Kind::Lower => {
            if ro != hat_plus(lambda, 1, h) {
                return Ok(out);
            }
            for p in 1..=s {
                if a.get(h, p) == 0 {
                    continue;
                }
                let c = vpow(beta_prime(a, h, p)) * bbracket(a.get(h + 1, p) as i64 + 1).bar();
                let b = shift_matrix(a, &[(h, p, -1), (h + 1, p, 1)]).expect("entry checked");
                out.add_term(&b, &c);
            }
        }
        Kind::Theta => {
            if ro != hat_plus(lambda, 1, n) {
                return Ok(out);
            }
            out.add_term(a, &c_coefficient(a));
            for p in 1..=s {
                if a.get(n, p) == 0 {
                    continue;
                }
                let eps = i64::from(p > n);
                let c =
                    vpow(beta_prime(a, n, p) - eps) * bbracket(a.get(n + 1, p) as i64 + 1).bar();
                let b = shift_matrix(a, &[(n, p, -1), (n + 1, p, 1)]).expect("entry checked");
                out.add_term(&b, &c);
            }
        }
    }
    Ok(out)
}

/// `[m E^theta + lambda hat] [A]` for `E^theta_{h,h+1}` or `E^theta_{h+1,h}`,
/// `h < n`.
pub fn multi_mul(
    kind: Kind,
    h: usize,
    m: u32,
    lambda: &Composition,
    a: &ThetaMatrix,
) -> Result<SchurElement> {
    if kind == Kind::Theta {
        return Err(Error::Parameter(
            "no closed divided-power formula for the middle generator".into(),
        ));
    }
    check_inputs(kind, h, m, lambda, a)?;
    let n = a.n();
    let s = a.size();
    let mut out = SchurElement::zero(n, a.total() as usize / 2);
    let ro = ro_i64(a);
    // `src` loses the units, `dst` gains them.
    let (src, dst) = match kind {
        Kind::Raise => (h + 1, h),
        _ => (h, h + 1),
    };
    if ro != hat_plus(lambda, m as i64, src) {
        return Ok(out);
    }
    let row: Vec<u32> = (1..=s).map(|j| a.get(src, j)).collect();
    for nu in bounded_compositions(m, &row) {
        let nu: Vec<i64> = nu.into_iter().map(i64::from).collect();
        let mut exp = 0i64;
        for p in 1..=s {
            let x = nu[p - 1];
            if x == 0 {
                continue;
            }
            match kind {
                Kind::Raise => {
                    exp += x * beta(a, h, p);
                    exp += x * (1..p).map(|j| nu[j - 1]).sum::<i64>();
                }
                _ => {
                    exp += x * beta_prime(a, h, p);
                    exp += x * (p + 1..=s).map(|j| nu[j - 1]).sum::<i64>();
                }
            }
        }
        let mut c = vpow(exp);
        let mut moves = Vec::new();
        for u in 1..=s {
            let x = nu[u - 1];
            if x == 0 {
                continue;
            }
            c *= &gauss_binom(a.get(dst, u) as i64 + x, x as u32)?.bar();
            moves.push((dst, u, x));
            moves.push((src, u, -x));
        }
        let b = shift_matrix(a, &moves).expect("nu is bounded by the source row");
        out.add_term(&b, &c);
    }
    Ok(out)
}
