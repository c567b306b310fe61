use super::LaurentPoly;
use crate::error::{Error, Result};

/// `v^k - v^-k`.
fn vdiff(k: i64) -> LaurentPoly {
    LaurentPoly::v_pow(k as i32) - LaurentPoly::v_pow(-(k as i32))
}

/// `q^k - 1` with `q = v^2`.
fn qdiff(k: i64) -> LaurentPoly {
    LaurentPoly::v_pow(2 * k as i32) - LaurentPoly::one()
}

/// Balanced quantum integer `[n] = (v^n - v^-n) / (v - v^-1)`.
pub fn bracket(n: i64) -> LaurentPoly {
    let sign = if n < 0 { -1 } else { 1 };
    let m = n.abs();
    let p = LaurentPoly::from_terms((0..m).map(|i| ((m - 1 - 2 * i) as i32, 1i64)));
    p.scale_i64(sign)
}

/// Unbalanced quantum integer `[[n]] = (q^n - 1) / (q - 1)`.
pub fn bbracket(n: i64) -> LaurentPoly {
    if n >= 0 {
        LaurentPoly::from_terms((0..n).map(|i| (2 * i as i32, 1i64)))
    } else {
        LaurentPoly::from_terms((n..0).map(|i| (2 * i as i32, -1i64)))
    }
}

/// Gaussian binomial `[[n over m]]` in `q = v^2`; requires `n >= 0`.
pub fn gauss_binom(n: i64, m: u32) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::NegativeGaussBinomial(n));
    }
    let m = m as i64;
    if m > n {
        return Ok(LaurentPoly::zero());
    }
    let num: LaurentPoly = (0..m).map(|i| qdiff(n - i)).product();
    let den: LaurentPoly = (1..=m).map(qdiff).product();
    Ok(num
        .div_exact(&den)
        .expect("gaussian binomial quotient is a polynomial"))
}

/// Balanced binomial `[n over m]`, defined for every integer `n`.
pub fn balanced_binom(n: i64, m: u32) -> LaurentPoly {
    let m = m as i64;
    let mut num = LaurentPoly::one();
    for i in 1..=m {
        let k = n - i + 1;
        if k == 0 {
            return LaurentPoly::zero();
        }
        num = num * vdiff(k);
    }
    let den: LaurentPoly = (1..=m).map(vdiff).product();
    num.div_exact(&den)
        .expect("balanced binomial quotient is a Laurent polynomial")
}

/// `[m]! = [1][2]...[m]`.
pub fn qfactorial(m: u32) -> LaurentPoly {
    (1..=m as i64).map(bracket).product()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuantumScalar {
    /// `[n]`
    Bracket,
    /// `[[n]]`
    BBracket,
    /// `[n over m]`
    Balanced,
    /// `[[n over m]]`
    Gauss,
    /// `[n]!`
    Factorial,
}

/// Dispatches to the individual constructors; `m` is ignored by the
/// one-argument kinds.
pub fn quantum_scalar(n: i64, m: u32, kind: QuantumScalar) -> Result<LaurentPoly> {
    match kind {
        QuantumScalar::Bracket => Ok(bracket(n)),
        QuantumScalar::BBracket => Ok(bbracket(n)),
        QuantumScalar::Balanced => Ok(balanced_binom(n, m)),
        QuantumScalar::Gauss => gauss_binom(n, m),
        QuantumScalar::Factorial => {
            if n < 0 {
                return Err(Error::Parameter(format!("factorial of negative {n}")));
            }
            Ok(qfactorial(n as u32))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(t: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(t.iter().copied())
    }

    #[test]
    fn small_values() {
        assert_eq!(bracket(3), lp(&[(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(bracket(0), LaurentPoly::zero());
        assert_eq!(bracket(-2), lp(&[(1, -1), (-1, -1)]));
        assert_eq!(bbracket(3), lp(&[(0, 1), (2, 1), (4, 1)]));
        assert_eq!(
            gauss_binom(4, 2).unwrap(),
            lp(&[(0, 1), (2, 1), (4, 2), (6, 1), (8, 1)])
        );
        assert_eq!(
            balanced_binom(4, 2),
            lp(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)])
        );
        assert_eq!(qfactorial(3), lp(&[(3, 1), (1, 2), (-1, 2), (-3, 1)]));
    }

    #[test]
    fn negative_gauss_is_an_error() {
        assert_eq!(gauss_binom(-1, 1), Err(Error::NegativeGaussBinomial(-1)));
    }

    #[test]
    fn bbracket_closed_form() {
        for n in -4..6 {
            let q1 = LaurentPoly::v_pow(2) - LaurentPoly::one();
            assert_eq!(bbracket(n) * q1, qdiff(n));
        }
    }

    #[test]
    fn bracket_closed_form() {
        for n in -5..6 {
            assert_eq!(bracket(n) * vdiff(1), vdiff(n));
        }
    }

    #[test]
    fn zero_parts_are_one() {
        assert!(gauss_binom(0, 0).unwrap().is_one());
        assert!(balanced_binom(-3, 0).is_one());
        assert!(qfactorial(0).is_one());
    }
}
