//! Operator identities on `Omega^{⊗r}` and the comparison with the Schur
//! algebra through `eta`.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::longform::{long_element, LongGen};
use crate::qarith::{bracket, LaurentPoly};
use crate::schur::{SchurAlgebra, SchurElement};
use crate::weyl::{Composition, ThetaMatrix, WeylElement, WeylGroup};

use super::{
    gl_action, hecke_action_tensor, iota_image, ui_action_closed, MultiIndex, Operator,
    TensorVector, UiGen,
};

/// The matrix `A_i`; for `n < r` it is padded to `A_i°` in size `2r`.
pub fn a_matrix(i: &MultiIndex, n: usize) -> ThetaMatrix {
    let r = i.r();
    let big = n.max(r);
    let off = big - n;
    let s = 2 * big;
    let mut rows = vec![vec![0u32; s]; s];
    for l in 1..=r {
        let k = i.at(l) + off;
        rows[k - 1][l - 1] += 1;
        rows[s - k][s - l] += 1;
    }
    ThetaMatrix::from_rows(&rows).expect("centro-symmetric by construction")
}

/// `A -> A°`, padding with `off` zero rows and columns on each side.
pub fn embed_matrix(a: &ThetaMatrix, off: usize) -> ThetaMatrix {
    let s = a.size() + 2 * off;
    let mut rows = vec![vec![0u32; s]; s];
    for (k, row) in a.rows().into_iter().enumerate() {
        for (l, x) in row.into_iter().enumerate() {
            rows[k + off][l + off] = x;
        }
    }
    ThetaMatrix::from_rows(&rows).expect("padding keeps centro-symmetry")
}

pub fn embed(x: &SchurElement, big: usize) -> SchurElement {
    let off = big - x.n();
    let mut out = SchurElement::zero(big, x.r());
    for (a, c) in x.terms() {
        out.add_term(&embed_matrix(a, off), c);
    }
    out
}

/// `omega_i -> [A_i]`, landing in `S(max(n, r), r)`.
pub fn eta(v: &TensorVector) -> SchurElement {
    let big = v.n().max(v.r());
    let mut out = SchurElement::zero(big, v.r());
    for (i, c) in v.terms() {
        out.add_term(&a_matrix(i, v.n()), c);
    }
    out
}

/// The Schur algebra element a generator acts by, in `S(max(n, r), r)`.
pub fn schur_image(gen: &UiGen, n: usize, r: usize) -> Result<SchurElement> {
    gen.check(n)?;
    let z = ThetaMatrix::zero(n);
    let weight = |j: usize, e: i64| {
        let mut w = vec![0; n];
        w[j - 1] = e;
        long_element(&z, &w, r)
    };
    let x = match *gen {
        UiGen::D(j) => weight(j, -1)?,
        UiGen::DInv(j) => weight(j, 1)?,
        UiGen::E(h) => LongGen::Lower(h).element(n, r)?,
        UiGen::F(h) => LongGen::Raise(h).element(n, r)?,
        UiGen::T => LongGen::Middle.element(n, r)?.add(&weight(n, -1)?)?,
    };
    Ok(embed(&x, n.max(r)))
}

pub fn ui_operator(gen: &UiGen, n: usize, r: usize) -> Result<Operator> {
    gen.check(n)?;
    Ok(Operator::from_fn(n, r, |i| {
        ui_action_closed(gen, &TensorVector::basis(n, i)).expect("generator checked")
    }))
}

pub fn hecke_operator(j: usize, n: usize, r: usize) -> Result<Operator> {
    let probe = TensorVector::zero(n, r);
    hecke_action_tensor(j, &probe)?;
    Ok(Operator::from_fn(n, r, |i| {
        hecke_action_tensor(j, &TensorVector::basis(n, i)).expect("index checked")
    }))
}

/// One named identity and whether it held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedCheck {
    pub name: String,
    pub holds: bool,
}

fn check(out: &mut Vec<NamedCheck>, name: String, holds: bool) {
    out.push(NamedCheck { name, holds });
}

fn vp(e: i32) -> LaurentPoly {
    LaurentPoly::v_pow(e)
}

/// Defining relations of the coideal subalgebra as operator identities on
/// `Omega^{⊗r}`, with the closed-form action.
pub fn check_relations(n: usize, r: usize) -> Result<Vec<NamedCheck>> {
    let op = |g: UiGen| ui_operator(&g, n, r);
    let id = Operator::identity(n, r);
    let two = bracket(2);
    let t = op(UiGen::T)?;
    let mut out = Vec::new();
    let d: Vec<Operator> = (1..=n).map(|a| op(UiGen::D(a))).collect::<Result<_>>()?;
    let dinv: Vec<Operator> = (1..=n).map(|a| op(UiGen::DInv(a))).collect::<Result<_>>()?;
    let e: Vec<Operator> = (1..n).map(|h| op(UiGen::E(h))).collect::<Result<_>>()?;
    let f: Vec<Operator> = (1..n).map(|h| op(UiGen::F(h))).collect::<Result<_>>()?;
    for a in 0..n {
        let inv = d[a].compose(&dinv[a]) == id && dinv[a].compose(&d[a]) == id;
        check(&mut out, format!("inverse d_{0} d_{0}^-1", a + 1), inv);
        for b in 0..n {
            let comm = d[a].compose(&d[b]) == d[b].compose(&d[a]);
            check(&mut out, format!("commute d_{} d_{}", a + 1, b + 1), comm);
        }
        for j in 0..n - 1 {
            let k = i32::from(a == j) - i32::from(a == j + 1);
            let ce = d[a].compose(&e[j]).compose(&dinv[a]) == e[j].scale(&vp(k));
            check(&mut out, format!("weight d_{} e_{}", a + 1, j + 1), ce);
            let cf = d[a].compose(&f[j]).compose(&dinv[a]) == f[j].scale(&vp(-k));
            check(&mut out, format!("weight d_{} f_{}", a + 1, j + 1), cf);
        }
        let ct = d[a].compose(&t).compose(&dinv[a]) == t;
        check(&mut out, format!("weight d_{} t", a + 1), ct);
    }
    let vdiff = vp(1) - vp(-1);
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            let lhs = e[i].compose(&f[j]).sub(&f[j].compose(&e[i])).scale(&vdiff);
            let rhs = if i == j {
                d[i].compose(&dinv[i + 1]).sub(&dinv[i].compose(&d[i + 1]))
            } else {
                Operator::zero(n, r)
            };
            check(
                &mut out,
                format!("commutator e_{} f_{}", i + 1, j + 1),
                lhs == rhs,
            );
            let gap = i.abs_diff(j);
            for (label, x) in [("e", &e), ("f", &f)] {
                if gap > 1 {
                    let ok = x[i].compose(&x[j]) == x[j].compose(&x[i]);
                    check(
                        &mut out,
                        format!("distant {label}_{} {label}_{}", i + 1, j + 1),
                        ok,
                    );
                }
                if gap == 1 {
                    let lhs = x[i].pow(2).compose(&x[j]).add(&x[j].compose(&x[i].pow(2)));
                    let rhs = x[i].compose(&x[j]).compose(&x[i]).scale(&two);
                    check(
                        &mut out,
                        format!("serre {label}_{} {label}_{}", i + 1, j + 1),
                        lhs == rhs,
                    );
                }
            }
        }
        for (label, x) in [("e", &e), ("f", &f)] {
            if i + 1 != n - 1 {
                let ok = x[i].compose(&t) == t.compose(&x[i]);
                check(&mut out, format!("commute {label}_{} t", i + 1), ok);
                continue;
            }
            let lhs = t.pow(2).compose(&x[i]).add(&x[i].compose(&t.pow(2)));
            let rhs = t.compose(&x[i]).compose(&t).scale(&two).add(&x[i]);
            check(
                &mut out,
                format!("wall serre t t {label}_{}", i + 1),
                lhs == rhs,
            );
            let lhs = x[i].pow(2).compose(&t).add(&t.compose(&x[i].pow(2)));
            let rhs = x[i].compose(&t).compose(&x[i]).scale(&two);
            check(
                &mut out,
                format!("wall serre {label}_{0} {label}_{0} t", i + 1),
                lhs == rhs,
            );
        }
    }
    Ok(out)
}

/// `T_{a_1} ... T_{a_k}` acting on the right.
fn hecke_word(hs: &[Operator], word: &[usize]) -> Operator {
    word.iter()
        .fold(Operator::identity(hs[0].n, hs[0].r), |acc, &j| {
            hs[j - 1].compose(&acc)
        })
}

/// Quadratic, braid and wall relations of the Hecke algebra on
/// `Omega^{⊗r}`.
pub fn hecke_relations(n: usize, r: usize) -> Result<Vec<NamedCheck>> {
    let hs: Vec<Operator> = (1..=r)
        .map(|j| hecke_operator(j, n, r))
        .collect::<Result<_>>()?;
    let id = Operator::identity(n, r);
    let q = vp(2);
    let mut out = Vec::new();
    for j in 1..=r {
        let lhs = hs[j - 1].pow(2);
        let rhs = hs[j - 1]
            .scale(&(&q - &LaurentPoly::one()))
            .add(&id.scale(&q));
        check(&mut out, format!("quadratic s_{j}"), lhs == rhs);
        for k in j + 1..=r {
            let (a, b) = (hecke_word(&hs, &[j, k]), hecke_word(&hs, &[k, j]));
            if k == j + 1 && k < r {
                let ok = hecke_word(&hs, &[j, k, j]) == hecke_word(&hs, &[k, j, k]);
                check(&mut out, format!("braid s_{j} s_{k}"), ok);
            } else if k == j + 1 {
                let ok = hecke_word(&hs, &[j, k, j, k]) == hecke_word(&hs, &[k, j, k, j]);
                check(&mut out, format!("wall braid s_{j} s_{k}"), ok);
            } else {
                check(&mut out, format!("commute s_{j} s_{k}"), a == b);
            }
        }
    }
    Ok(out)
}

/// The composition `(1^r, 0^{N-r})` whose diagonal is the idempotent at
/// the column profile of every `A_i`.
fn empty_profile(big: usize, r: usize) -> Composition {
    let mut p = vec![1u32; r];
    p.resize(big, 0);
    Composition::new(p).expect("nonempty")
}

/// (a) the closed-form action commutes with the Hecke action; (b) `eta`
/// intertwines both actions with multiplication in the Schur algebra;
/// (c) the closed forms agree with the coproduct action of the images in
/// `U(gl_2n)`. Also weight bookkeeping and injectivity of `eta`.
pub fn check_commuting_and_match(n: usize, r: usize) -> Result<Vec<NamedCheck>> {
    let big = n.max(r);
    let alg = SchurAlgebra::get(big, r)?;
    let basis = MultiIndex::all(n, r);
    let gens = UiGen::all(n);
    let hs: Vec<Operator> = (1..=r)
        .map(|j| hecke_operator(j, n, r))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for g in &gens {
        let u = ui_operator(g, n, r)?;
        for (j, h) in hs.iter().enumerate() {
            let ok = u.compose(h) == h.compose(&u);
            check(&mut out, format!("(a) {g} with T_{}", j + 1), ok);
        }
        let x = schur_image(g, n, r)?;
        let mut eta_ok = true;
        let mut gl_ok = true;
        let image = iota_image(g, n)?;
        for i in &basis {
            let w = TensorVector::basis(n, i);
            let closed = u.column(i);
            eta_ok &= eta(closed) == alg.product(&x, &eta(&w))?;
            gl_ok &= gl_action(&image, &w)? == *closed;
        }
        check(&mut out, format!("(b) eta intertwines {g}"), eta_ok);
        check(
            &mut out,
            format!("(c) closed form of {g} matches its image"),
            gl_ok,
        );
    }
    let group = WeylGroup::get(r)?;
    let profile = empty_profile(big, r);
    for (j, h) in hs.iter().enumerate() {
        let s = group
            .index_of(&WeylElement::generator(j + 1, r)?)
            .expect("generator is in the group");
        let m = SchurElement::basis(&group.matrix_of_triple(&profile, s, &profile)?).scale(&vp(1));
        let mut ok = true;
        for i in &basis {
            let lhs = eta(h.column(i));
            ok &= lhs == alg.product(&eta(&TensorVector::basis(n, i)), &m)?;
        }
        check(&mut out, format!("(b) eta intertwines T_{}", j + 1), ok);
    }
    let mut weights_ok = true;
    for i in &basis {
        let ro = a_matrix(i, n).ro();
        let off = big - n;
        for j in 1..=n {
            let delta = ro[off + j - 1] as i32;
            let col = ui_operator(&UiGen::D(j), n, r)?;
            weights_ok &= *col.column(i) == TensorVector::basis(n, i).scale(&vp(-delta));
        }
    }
    check(&mut out, "d_j eigenvalue from ro(A_i)".into(), weights_ok);
    let images: BTreeSet<ThetaMatrix> = basis.iter().map(|i| a_matrix(i, n)).collect();
    let profile_hat: Vec<u32> = profile.hat();
    let on_profile = images.iter().all(|a| a.co() == profile_hat);
    let count = alg
        .basis_matrices()
        .into_iter()
        .filter(|a| {
            a.co() == profile_hat && (big == n || a.ro()[..big - n].iter().all(|&x| x == 0))
        })
        .count();
    check(
        &mut out,
        "eta is a bijection onto its column profile".into(),
        on_profile && images.len() == basis.len() && count == basis.len(),
    );
    Ok(out)
}
