use ischur_core::longform::{long_element, LongGen};
use ischur_core::tensor::checks::{a_matrix, check_relations, eta, ui_operator};
use ischur_core::tensor::{
    gl_action, hecke_action_tensor, iota_image, ui_action_closed, GlExpr, GlGen, UiGen,
};
use ischur_core::{LaurentPoly, MultiIndex, SchurAlgebra, TensorVector, ThetaMatrix};
use proptest::prelude::*;

fn v(e: i32) -> LaurentPoly {
    LaurentPoly::v_pow(e)
}

fn w(n: usize, e: &[usize]) -> TensorVector {
    TensorVector::basis(n, &MultiIndex::new(e.to_vec(), n).unwrap())
}

fn via_gl(gen: UiGen, x: &TensorVector) -> TensorVector {
    gl_action(&iota_image(&gen, x.n()).unwrap(), x).unwrap()
}

#[test]
fn middle_generator_at_rank_one() {
    let t1 = w(1, &[1]).scale(&v(-1)).add(&w(1, &[2]));
    let t2 = w(1, &[1]).add(&w(1, &[2]).scale(&v(1)));
    for (x, expect) in [(w(1, &[1]), t1), (w(1, &[2]), t2)] {
        assert_eq!(ui_action_closed(&UiGen::T, &x).unwrap(), expect);
        assert_eq!(via_gl(UiGen::T, &x), expect);
    }
}

#[test]
fn embedding_images() {
    let one = LaurentPoly::one;
    assert_eq!(
        iota_image(&UiGen::D(1), 1).unwrap(),
        GlExpr::word(one(), vec![GlGen::K(1, -1), GlGen::K(2, -1)])
    );
    let e1 = iota_image(&UiGen::E(1), 2).unwrap();
    assert_eq!(e1.terms[0], (one(), vec![GlGen::F(1)]));
    assert_eq!(
        e1.terms[1],
        (one(), vec![GlGen::K(1, -1), GlGen::K(2, 1), GlGen::E(3)])
    );
    assert_eq!(iota_image(&UiGen::T, 1).unwrap().terms.len(), 3);
}

#[test]
fn hecke_on_rank_one() {
    assert_eq!(
        hecke_action_tensor(1, &w(1, &[1])).unwrap(),
        w(1, &[2]).scale(&v(1))
    );
    assert_eq!(
        hecke_action_tensor(1, &w(1, &[2])).unwrap(),
        w(1, &[2])
            .scale(&(v(2) - LaurentPoly::one()))
            .add(&w(1, &[1]).scale(&v(1)))
    );
}

#[test]
fn index_matrices() {
    let m = |rows: &[&[u32]]| {
        ThetaMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    };
    let i = MultiIndex::new(vec![2], 1).unwrap();
    assert_eq!(a_matrix(&i, 1), m(&[&[0, 1], &[1, 0]]));
    let i = MultiIndex::new(vec![2], 2).unwrap();
    assert_eq!(
        a_matrix(&i, 2),
        m(&[&[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]])
    );
}

#[test]
fn raising_lowering_commutator() {
    // (e_1 f_1 - f_1 e_1)(v - v^-1) = d_1 d_2^-1 - d_1^-1 d_2 at n = 2, r = 1.
    let op = |g| ui_operator(&g, 2, 1).unwrap();
    let lhs = op(UiGen::E(1))
        .compose(&op(UiGen::F(1)))
        .sub(&op(UiGen::F(1)).compose(&op(UiGen::E(1))))
        .scale(&(v(1) - v(-1)));
    let rhs = op(UiGen::D(1))
        .compose(&op(UiGen::DInv(2)))
        .sub(&op(UiGen::DInv(1)).compose(&op(UiGen::D(2))));
    assert_eq!(lhs, rhs);
}

#[test]
fn wall_relations_at_two_two() {
    let checks = check_relations(2, 2).unwrap();
    assert!(checks
        .iter()
        .any(|c| c.name.starts_with("wall serre t t e_1")));
    for c in checks {
        assert!(c.holds, "{}", c.name);
    }
}

#[test]
fn middle_generator_through_eta() {
    let alg = SchurAlgebra::get(2, 2).unwrap();
    let g = LongGen::Middle
        .element(2, 2)
        .unwrap()
        .add(&long_element(&ThetaMatrix::zero(2), &[0, -1], 2).unwrap())
        .unwrap();
    for i in MultiIndex::all(2, 2) {
        let x = TensorVector::basis(2, &i);
        let lhs = eta(&ui_action_closed(&UiGen::T, &x).unwrap());
        assert_eq!(lhs, alg.product(&g, &eta(&x)).unwrap(), "{i:?}");
    }
}

/// `t` with the lowering sum restricted to the first position holding
/// `n + 1`; this reading disagrees with the coproduct.
fn t_first_only(i: &MultiIndex, n: usize) -> TensorVector {
    let r = i.r();
    let mut out = TensorVector::zero(n, r);
    let vp = |e: i64| v(e as i32);
    out.add_term(i, &vp(i.count(n + 1, 1..=r) - i.count(n, 1..=r)));
    let tau = |l: usize| i.count(n + 1, 1..l) - i.count(n, 1..l);
    for l in 1..=r {
        if i.at(l) == n {
            out.add_term(&i.with(l, n + 1), &vp(tau(l)));
        }
    }
    if let Some(l) = (1..=r).find(|&l| i.at(l) == n + 1) {
        out.add_term(&i.with(l, n), &vp(tau(l)));
    }
    out
}

#[test]
fn first_position_reading_is_wrong() {
    let x = w(1, &[2, 2]);
    let alt = t_first_only(&MultiIndex::new(vec![2, 2], 1).unwrap(), 1);
    assert_ne!(alt, via_gl(UiGen::T, &x));
    assert_eq!(
        ui_action_closed(&UiGen::T, &x).unwrap(),
        via_gl(UiGen::T, &x)
    );
}

fn index(n: usize, r: usize) -> impl Strategy<Value = MultiIndex> {
    prop::collection::vec(1..=2 * n, r).prop_map(move |e| MultiIndex::new(e, n).unwrap())
}

proptest! {
    #[test]
    fn hat_is_palindromic(i in index(3, 4)) {
        let (n, r) = (3, 4);
        let hat = i.hat(n);
        prop_assert_eq!(hat.len(), 2 * r);
        for j in 1..=2 * r {
            prop_assert_eq!(hat[2 * r - j], 2 * n + 1 - hat[j - 1]);
        }
        let full: Vec<u32> = (1..=2 * n).map(|j| hat.iter().filter(|&&x| x == j).count() as u32).collect();
        let mut rev = full.clone();
        rev.reverse();
        prop_assert_eq!(&full, &rev);
        prop_assert_eq!(i.weight(n), full[..n].to_vec());
        prop_assert_eq!(i.weight(n).iter().sum::<u32>() as usize, r);
    }

    #[test]
    fn closed_forms_match_the_coproduct(i in index(2, 3), which in 0usize..7) {
        let gen = UiGen::all(2)[which];
        let x = TensorVector::basis(2, &i);
        prop_assert_eq!(ui_action_closed(&gen, &x).unwrap(), via_gl(gen, &x));
    }

    #[test]
    fn actions_commute(i in index(2, 3), which in 0usize..7, j in 1usize..=3) {
        let gen = UiGen::all(2)[which];
        let x = TensorVector::basis(2, &i);
        let a = hecke_action_tensor(j, &ui_action_closed(&gen, &x).unwrap()).unwrap();
        let b = ui_action_closed(&gen, &hecke_action_tensor(j, &x).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }
}
