//! Divided powers of the generators, commutation identities and
//! K-binomials, all evaluated inside `S(n, r)`.

use crate::error::{Error, Result};
use crate::qarith::{bracket, qfactorial, LaurentPoly};
use crate::schur::{SchurAlgebra, SchurElement};
use crate::weyl::{Composition, ThetaMatrix};

use super::{e_matrix, left_mul, long_element, long_mul_symbolic, FormalCombination, LongGen};

/// `1 / [m]! = (v - v^-1)^m / prod_{i <= m} (v^i - v^-i)` applied to `x`.
fn over_factorial(x: &FormalCombination, m: u32) -> FormalCombination {
    let num = (LaurentPoly::v_pow(1) - LaurentPoly::v_pow(-1)).pow(m);
    let den: Vec<u32> = (1..=m).collect();
    x.scale(&num, &den)
}

fn power_in(alg: &SchurAlgebra, x: &SchurElement, m: u32) -> Result<SchurElement> {
    let mut acc = alg.one();
    for _ in 0..m {
        acc = alg.product(x, &acc)?;
    }
    Ok(acc)
}

/// Both sides of a divided-power identity at one `r`.
#[derive(Debug, Clone)]
pub struct DividedPower {
    /// `gen^m / [m]!` computed in `S(n, r)`.
    pub power: SchurElement,
    /// The long element the identity names.
    pub expected: SchurElement,
}

impl DividedPower {
    pub fn holds(&self) -> bool {
        self.power == self.expected
    }
}

/// `E^theta_{h,h+1}(0, r)^m / [m]!` (or the lowering generator) against
/// `(m E^theta)(0, r)`. Division by `[m]!` must be exact.
pub fn divided_power(gen: &LongGen, n: usize, m: u32, r: usize) -> Result<DividedPower> {
    let (i, j) = match gen {
        LongGen::Raise(h) => (*h, *h + 1),
        LongGen::Lower(h) => (*h + 1, *h),
        _ => {
            return Err(Error::Parameter(
                "closed divided powers exist for the raising and lowering generators".into(),
            ))
        }
    };
    if m as usize > r {
        return Err(Error::Parameter(format!(
            "divided power m = {m} exceeds r = {r}"
        )));
    }
    let alg = SchurAlgebra::get(n, r)?;
    let power = power_in(&alg, &gen.element(n, r)?, m)?.div_exact(&qfactorial(m))?;
    let expected = long_element(&e_matrix(n, i, j, m), &vec![0; n], r)?;
    Ok(DividedPower { power, expected })
}

/// `E^theta_{n+1,n}(0)^m / [m]!` as a combination of long elements, by
/// applying the middle rule `m` times to `O(0)`.
pub fn t_power_expand(n: usize, m: u32) -> Result<FormalCombination> {
    let mut x = LongGen::O(vec![0; n]).as_combination(n)?;
    for _ in 0..m {
        x = left_mul(&LongGen::Middle, &x)?;
    }
    Ok(over_factorial(&x, m))
}

/// Checks the shape of [`t_power_expand`]: `(m E)(0)` with coefficient 1
/// plus multiples of `(s E)(j)` with `s < m` only.
pub fn t_power_shape(n: usize, m: u32, p: &FormalCombination) -> bool {
    let lead = e_matrix(n, n + 1, n, m);
    let zero = vec![0; n];
    let lead_ok = p.laurent_coeff(&lead, &zero).is_some_and(|c| c.is_one());
    let rest_ok = p.terms().all(|((b, j), _)| {
        (*b == lead && *j == zero) || (0..m).any(|s| *b == e_matrix(n, n + 1, n, s))
    });
    lead_ok && rest_ok
}

/// `[m]!` times [`t_power_expand`] evaluated at `r` against the power
/// computed in `S(n, r)`. The power itself need not be divisible by `[m]!`.
pub fn check_t_power(n: usize, m: u32, r: usize) -> Result<bool> {
    let p = t_power_expand(n, m)?;
    let alg = SchurAlgebra::get(n, r)?;
    let direct = power_in(&alg, &LongGen::Middle.element(n, r)?, m)?;
    let scaled = p.scale(&qfactorial(m), &[]);
    Ok(t_power_shape(n, m, &p) && scaled.evaluate(r)? == direct)
}

/// Right side of the recursion for `E^theta_{n+1,n}(0) (a E^theta_{n+1,n})(0)`.
pub fn eae_rhs(n: usize, a: u32) -> FormalCombination {
    let zero = vec![0; n];
    let mut en = zero.clone();
    en[n - 1] = -1;
    let mut etheta = zero.clone();
    etheta[n - 1] = -2;
    let va = LaurentPoly::v_pow(a as i32);
    let mut out =
        FormalCombination::single(&e_matrix(n, n + 1, n, a + 1), &zero, bracket(a as i64 + 1));
    out.add_term(
        &e_matrix(n, n + 1, n, a),
        &en,
        &(&va - &LaurentPoly::v_pow(-(a as i32))),
    );
    if a >= 1 {
        let mut frac = FormalCombination::zero(n);
        let b = e_matrix(n, n + 1, n, a - 1);
        frac.add_term(&b, &zero, &va);
        frac.add_term(&b, &etheta, &-&va);
        out = out.add(&frac.scale(&LaurentPoly::one(), &[1]));
    }
    out
}

/// The recursion checked two ways: against the middle rule applied to
/// `(a E)(0)`, and against the product computed in `S(n, r)`.
pub fn check_eae(n: usize, a: u32, r: usize) -> Result<bool> {
    let zero = vec![0; n];
    let ae = e_matrix(n, n + 1, n, a);
    let rhs = eae_rhs(n, a);
    let symbolic = long_mul_symbolic(&LongGen::Middle, &ae, &zero)?.same_as(&rhs);
    let alg = SchurAlgebra::get(n, r)?;
    let lhs = alg.product(
        &LongGen::Middle.element(n, r)?,
        &long_element(&ae, &zero, r)?,
    )?;
    Ok(symbolic && lhs == rhs.evaluate(r)?)
}

/// `(m E^theta_{n+1,n})(0) * X`, unwinding
/// `(m E)(0) = E(0)^m / [m]! - sum f (s E)(j)` with
/// `(s E)(j) = v^{-s j*_n} O(j) (s E)(0)`.
pub fn mul_divided_middle(m: u32, x: &FormalCombination) -> Result<FormalCombination> {
    let n = x.n();
    if m == 0 {
        return Ok(x.clone());
    }
    let p = t_power_expand(n, m)?;
    if !t_power_shape(n, m, &p) {
        return Err(Error::Residual(format!(
            "middle power {m} does not have the expected shape: {p:?}"
        )));
    }
    let mut out = x.clone();
    for _ in 0..m {
        out = left_mul(&LongGen::Middle, &out)?;
    }
    out = over_factorial(&out, m);
    let lead = e_matrix(n, n + 1, n, m);
    let den = p.denominator_list();
    for ((b, j), c) in p.terms() {
        if *b == lead {
            continue;
        }
        let s = b.get(n + 1, n);
        let inner = mul_divided_middle(s, x)?;
        let shifted = left_mul(&LongGen::O(j.clone()), &inner)?;
        let coeff = c.shift(-(s as i32) * j[n - 1] as i32);
        out = out.sub(&shifted.scale(&coeff, &den));
    }
    Ok(out)
}

/// The expansion of `(m E)(0) * A(j*)` is solved once; it must match the
/// product computed in `S(n, r)` at both `r` and `r + 1`.
pub fn dp3_certificate(m: u32, a: &ThetaMatrix, jstar: &[i64], r: usize) -> Result<bool> {
    let n = a.n();
    let x = FormalCombination::single(a, jstar, LaurentPoly::one());
    let g = mul_divided_middle(m, &x)?;
    for rr in [r, r + 1] {
        let alg = SchurAlgebra::get(n, rr)?;
        let left = long_element(&e_matrix(n, n + 1, n, m), &vec![0; n], rr)?;
        let direct = alg.product(&left, &long_element(a, jstar, rr)?)?;
        if g.evaluate(rr)? != direct {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The three commutation identities at one `(h, j*, r)`. The raising and
/// lowering checks need `h < n - 1` and are `None` when `h = n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Commutation {
    /// `O(j)` with the middle generator.
    pub weight: bool,
    /// `E^theta_{h,h+1}(0)` with the middle generator.
    pub raise: Option<bool>,
    /// `E^theta_{h+1,h}(0)` with the middle generator.
    pub lower: Option<bool>,
}

impl Commutation {
    pub fn holds(&self) -> bool {
        self.weight && self.raise != Some(false) && self.lower != Some(false)
    }
}

pub fn commutation_checks(n: usize, h: usize, jstar: &[i64], r: usize) -> Result<Commutation> {
    if h == 0 || h >= n {
        return Err(Error::Parameter(format!("h = {h} outside [1, {n})")));
    }
    let alg = SchurAlgebra::get(n, r)?;
    let mid = LongGen::Middle.element(n, r)?;
    let commutes = |g: &LongGen| -> Result<bool> {
        let x = g.element(n, r)?;
        Ok(alg.product(&x, &mid)? == alg.product(&mid, &x)?)
    };
    let adjacent = h + 1 < n;
    Ok(Commutation {
        weight: commutes(&LongGen::O(jstar.to_vec()))?,
        raise: adjacent.then(|| commutes(&LongGen::Raise(h))).transpose()?,
        lower: adjacent.then(|| commutes(&LongGen::Lower(h))).transpose()?,
    })
}

/// `prod_i [k_i; 0 over lambda_i]` with `k_i = O(e_i, r)`, evaluated in
/// `S(n, r)`; equal to `[diag(lambda hat)]`.
pub fn k_binomial(lambda: &Composition, r: usize) -> Result<SchurElement> {
    let n = lambda.n();
    let alg = SchurAlgebra::get(n, r)?;
    let z = ThetaMatrix::zero(n);
    let mut acc = alg.one();
    let mut den = LaurentPoly::one();
    for i in 1..=n {
        let mut ei = vec![0; n];
        ei[i - 1] = 1;
        let k = long_element(&z, &ei, r)?;
        ei[i - 1] = -1;
        let kinv = long_element(&z, &ei, r)?;
        for t in 1..=lambda.parts[i - 1] as i32 {
            let f = k
                .scale(&LaurentPoly::v_pow(1 - t))
                .sub(&kinv.scale(&LaurentPoly::v_pow(t - 1)))?;
            acc = alg.product(&acc, &f)?;
            den *= &(LaurentPoly::v_pow(t) - LaurentPoly::v_pow(-t));
        }
    }
    acc.div_exact(&den)
}
