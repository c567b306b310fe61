use std::fmt;

use crate::error::{Error, Result};
use crate::qarith::LaurentPoly;

use super::{MultiIndex, TensorVector, UiGen};

/// Generators of `U(gl_2n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GlGen {
    E(usize),
    F(usize),
    /// `K_j^e`.
    K(usize, i32),
}

/// A formal sum of coefficient times word; a word `g_1 g_2 ... g_k` acts
/// with `g_k` first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GlExpr {
    pub terms: Vec<(LaurentPoly, Vec<GlGen>)>,
}

impl GlExpr {
    pub fn word(c: LaurentPoly, word: Vec<GlGen>) -> Self {
        Self {
            terms: vec![(c, word)],
        }
    }

    pub fn plus(mut self, other: GlExpr) -> Self {
        self.terms.extend(other.terms);
        self
    }

    fn check(&self, n: usize) -> Result<()> {
        for g in self.terms.iter().flat_map(|(_, w)| w) {
            let ok = match *g {
                GlGen::E(h) | GlGen::F(h) => h >= 1 && h < 2 * n,
                GlGen::K(j, _) => j >= 1 && j <= 2 * n,
            };
            if !ok {
                return Err(Error::Parameter(format!(
                    "{g:?} is not a generator of gl_{}",
                    2 * n
                )));
            }
        }
        Ok(())
    }
}

/// `K~_h^e = (K_h K_{h+1}^-1)^e` as two letters.
pub(crate) fn k_tilde(h: usize, e: i32) -> [GlGen; 2] {
    [GlGen::K(h, e), GlGen::K(h + 1, -e)]
}

fn vpow(e: i64) -> LaurentPoly {
    LaurentPoly::v_pow(e as i32)
}

/// Exponent of `K~_h` on `omega_i`.
fn tilde_exp(i: usize, h: usize) -> i64 {
    i64::from(i == h) - i64::from(i == h + 1)
}

/// One generator on one basis vector through the iterated coproduct:
/// `E_h` sits at a position with `1` before and `K~_h` after, `F_h` with
/// `K~_h^-1` before and `1` after, and `K_j` is group-like.
fn gen_on_basis(g: GlGen, n: usize, i: &MultiIndex) -> TensorVector {
    let r = i.r();
    let mut out = TensorVector::zero(n, r);
    match g {
        GlGen::E(h) => {
            for l in 1..=r {
                if i.at(l) == h + 1 {
                    let e: i64 = (l + 1..=r).map(|k| tilde_exp(i.at(k), h)).sum();
                    out.add_term(&i.with(l, h), &vpow(e));
                }
            }
        }
        GlGen::F(h) => {
            for l in 1..=r {
                if i.at(l) == h {
                    let e: i64 = (1..l).map(|k| -tilde_exp(i.at(k), h)).sum();
                    out.add_term(&i.with(l, h + 1), &vpow(e));
                }
            }
        }
        GlGen::K(j, e) => {
            out.add_term(i, &vpow(e as i64 * i.count(j, 1..=r)));
        }
    }
    out
}

/// The action of a formal expression on `Omega^{⊗r}`.
pub fn gl_action(x: &GlExpr, v: &TensorVector) -> Result<TensorVector> {
    let n = v.n();
    x.check(n)?;
    let mut out = TensorVector::zero(n, v.r());
    for (c, word) in &x.terms {
        let mut w = v.clone();
        for &g in word.iter().rev() {
            w = w.map(|i| gen_on_basis(g, n, i));
        }
        out = out.add(&w.scale(c));
    }
    Ok(out)
}

/// The image of a generator of the coideal subalgebra in `U(gl_2n)`.
pub fn iota_image(gen: &UiGen, n: usize) -> Result<GlExpr> {
    gen.check(n)?;
    let one = LaurentPoly::one;
    Ok(match *gen {
        UiGen::D(j) => GlExpr::word(one(), vec![GlGen::K(j, -1), GlGen::K(2 * n + 1 - j, -1)]),
        UiGen::DInv(j) => GlExpr::word(one(), vec![GlGen::K(j, 1), GlGen::K(2 * n + 1 - j, 1)]),
        UiGen::E(i) => {
            let mut w = k_tilde(i, -1).to_vec();
            w.push(GlGen::E(2 * n - i));
            GlExpr::word(one(), vec![GlGen::F(i)]).plus(GlExpr::word(one(), w))
        }
        UiGen::F(i) => {
            let mut w = vec![GlGen::E(i)];
            w.extend(k_tilde(2 * n - i, -1));
            GlExpr::word(one(), w).plus(GlExpr::word(one(), vec![GlGen::F(2 * n - i)]))
        }
        UiGen::T => {
            let mut w = vec![GlGen::E(n)];
            w.extend(k_tilde(n, -1));
            GlExpr::word(one(), vec![GlGen::F(n)])
                .plus(GlExpr::word(LaurentPoly::v_pow(-1), w))
                .plus(GlExpr::word(one(), k_tilde(n, -1).to_vec()))
        }
    })
}

impl fmt::Display for GlGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GlGen::E(h) => write!(f, "E_{h}"),
            GlGen::F(h) => write!(f, "F_{h}"),
            GlGen::K(j, 1) => write!(f, "K_{j}"),
            GlGen::K(j, e) => write!(f, "K_{j}^{e}"),
        }
    }
}

impl fmt::Display for GlExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, word)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "({c})")?;
            }
            let letters: Vec<String> = word.iter().map(ToString::to_string).collect();
            write!(
                f,
                "{}",
                if letters.is_empty() {
                    "1".into()
                } else {
                    letters.join(" ")
                }
            )?;
        }
        Ok(())
    }
}
