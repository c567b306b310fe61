use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qarith::LaurentPoly;

use super::{MultiIndex, TensorVector};

/// Generators `d_j^{±1}`, `e_h`, `f_h`, `t` of the coideal subalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UiGen {
    D(usize),
    DInv(usize),
    E(usize),
    F(usize),
    T,
}

impl UiGen {
    pub(crate) fn check(&self, n: usize) -> Result<()> {
        match *self {
            UiGen::D(j) | UiGen::DInv(j) if j == 0 || j > n => {
                Err(Error::Parameter(format!("d_{j} needs 1 <= j <= {n}")))
            }
            UiGen::E(h) | UiGen::F(h) if h == 0 || h >= n => {
                Err(Error::Parameter(format!("e_{h} / f_{h} need 1 <= h < {n}")))
            }
            _ => Ok(()),
        }
    }

    /// Every generator for rank `n`, `d_j^{-1}` included.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out: Vec<Self> = (1..=n)
            .flat_map(|j| [UiGen::D(j), UiGen::DInv(j)])
            .collect();
        out.extend((1..n).flat_map(|h| [UiGen::E(h), UiGen::F(h)]));
        out.push(UiGen::T);
        out
    }
}

impl fmt::Display for UiGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UiGen::D(j) => write!(f, "d_{j}"),
            UiGen::DInv(j) => write!(f, "d_{j}^-1"),
            UiGen::E(h) => write!(f, "e_{h}"),
            UiGen::F(h) => write!(f, "f_{h}"),
            UiGen::T => write!(f, "t"),
        }
    }
}

impl FromStr for UiGen {
    type Err = Error;

    /// `d_j`, `d_j^-1`, `e_h`, `f_h` or `t`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parameter(format!("unknown generator {s:?}"));
        if s == "t" {
            return Ok(UiGen::T);
        }
        let (head, rest) = s.split_once('_').ok_or_else(bad)?;
        let (num, inv) = match rest.strip_suffix("^-1") {
            Some(x) => (x, true),
            None => (rest, false),
        };
        let k: usize = num.parse().map_err(|_| bad())?;
        match (head, inv) {
            ("d", false) => Ok(UiGen::D(k)),
            ("d", true) => Ok(UiGen::DInv(k)),
            ("e", false) => Ok(UiGen::E(k)),
            ("f", false) => Ok(UiGen::F(k)),
            _ => Err(bad()),
        }
    }
}

fn vpow(e: i64) -> LaurentPoly {
    LaurentPoly::v_pow(e as i32)
}

fn closed_on_basis(gen: UiGen, n: usize, i: &MultiIndex) -> TensorVector {
    let r = i.r();
    let m = 2 * n;
    let mut out = TensorVector::zero(n, r);
    let delta = |j: usize| i.count(j, 1..=r) + i.count(m + 1 - j, 1..=r);
    match gen {
        UiGen::D(j) => out.add_term(i, &vpow(-delta(j))),
        UiGen::DInv(j) => out.add_term(i, &vpow(delta(j))),
        UiGen::E(h) => {
            let eps1 = |l: usize| -i.count(h, 1..l) + i.count(h + 1, 1..l);
            let eps2 = |l: usize| {
                -i.count(h, l + 1..=r) + i.count(h + 1, l + 1..=r) + i.count(m - h, l + 1..=r)
                    - i.count(m - h + 1, l + 1..=r)
            };
            for l in 1..=r {
                if i.at(l) == h {
                    out.add_term(&i.with(l, h + 1), &vpow(eps1(l)));
                }
                if i.at(l) == m - h + 1 {
                    out.add_term(&i.with(l, m - h), &vpow(eps1(l) + eps2(l)));
                }
            }
        }
        UiGen::F(h) => {
            let eps1 = |l: usize| -i.count(m - h, 1..l) + i.count(m - h + 1, 1..l);
            let eps2 = |l: usize| {
                i.count(h, l + 1..=r) - i.count(h + 1, l + 1..=r) - i.count(m - h, l + 1..=r)
                    + i.count(m - h + 1, l + 1..=r)
            };
            for l in 1..=r {
                if i.at(l) == h + 1 {
                    out.add_term(&i.with(l, h), &vpow(eps1(l) + eps2(l)));
                }
                if i.at(l) == m - h {
                    out.add_term(&i.with(l, m - h + 1), &vpow(eps1(l)));
                }
            }
        }
        UiGen::T => {
            out.add_term(i, &vpow(i.count(n + 1, 1..=r) - i.count(n, 1..=r)));
            let tau1 = |l: usize| i.count(n + 1, 1..l) - i.count(n, 1..l);
            for l in 1..=r {
                if i.at(l) == n {
                    out.add_term(&i.with(l, n + 1), &vpow(tau1(l)));
                }
                // Every position holding n + 1 contributes, not only the first.
                if i.at(l) == n + 1 {
                    out.add_term(&i.with(l, n), &vpow(tau1(l)));
                }
            }
        }
    }
    out
}

/// The coideal generators on `Omega^{⊗r}` by the closed formulas.
pub fn ui_action_closed(gen: &UiGen, v: &TensorVector) -> Result<TensorVector> {
    gen.check(v.n())?;
    Ok(v.map(|i| closed_on_basis(*gen, v.n(), i)))
}

fn hecke_on_basis(j: usize, n: usize, i: &MultiIndex) -> TensorVector {
    let r = i.r();
    let (a, b, swapped) = if j < r {
        let mut e = i.entries().to_vec();
        e.swap(j - 1, j);
        (i.at(j), i.at(j + 1), MultiIndex(e))
    } else {
        let a = i.at(r);
        (a, 2 * n + 1 - a, i.with(r, 2 * n + 1 - a))
    };
    let mut out = TensorVector::zero(n, r);
    let v = LaurentPoly::v_pow(1);
    if a < b {
        out.add_term(&swapped, &v);
    } else if a == b {
        out.add_term(i, &LaurentPoly::v_pow(2));
    } else {
        out.add_term(i, &(LaurentPoly::v_pow(2) - LaurentPoly::one()));
        out.add_term(&swapped, &v);
    }
    out
}

/// The right action of `T_{s_j}`; `s_r` is the generator at the wall and
/// compares `i_r` with `2n + 1 - i_r`.
pub fn hecke_action_tensor(j: usize, v: &TensorVector) -> Result<TensorVector> {
    if j == 0 || j > v.r() {
        return Err(Error::GeneratorOutOfRange {
            index: j,
            rank: v.r(),
        });
    }
    Ok(v.map(|i| hecke_on_basis(j, v.n(), i)))
}
