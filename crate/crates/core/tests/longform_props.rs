use ischur_core::longform::divided::{
    check_eae, check_t_power, commutation_checks, divided_power, k_binomial, t_power_expand,
    t_power_shape,
};
use ischur_core::longform::{
    fold, long_element, long_element_full, long_mul_evaluated, long_mul_symbolic,
    verify_r_stability, zero_diagonal_matrices, FormalCombination, LongGen,
};
use ischur_core::qarith::qfactorial;
use ischur_core::{Composition, LaurentPoly, SchurAlgebra, SchurElement, ThetaMatrix};
use proptest::prelude::*;

fn v(e: i32) -> LaurentPoly {
    LaurentPoly::v_pow(e)
}

fn middle(n: usize) -> ThetaMatrix {
    ThetaMatrix::zero(n).add_e_theta(n + 1, n, 1).unwrap()
}

#[test]
fn weight_on_the_left() {
    // O(e_1) E(0) = v^{ro(E) . e_1} E(e_1) at n = r = 1.
    let e = middle(1);
    let alg = SchurAlgebra::get(1, 1).unwrap();
    let lhs = alg
        .product(
            &long_element_full(&ThetaMatrix::zero(1), &[1, 0], 1).unwrap(),
            &long_element(&e, &[0], 1).unwrap(),
        )
        .unwrap();
    let rhs = long_element_full(&e, &[1, 0], 1).unwrap().scale(&v(1));
    assert_eq!(lhs, rhs);
}

#[test]
fn middle_on_weights() {
    // E(0) O(j) = v^{j_n + j_{n+1}} E(j), since c_O = 0.
    for n in 1..=2 {
        let e = middle(n);
        for r in 1..=3 {
            let alg = SchurAlgebra::get(n, r).unwrap();
            for j in ischur_core::longform::weight_grid(2 * n, -1, 1) {
                let o = long_element_full(&ThetaMatrix::zero(n), &j, r).unwrap();
                let lhs = alg
                    .product(&long_element(&e, &vec![0; n], r).unwrap(), &o)
                    .unwrap();
                let rhs = long_element_full(&e, &j, r)
                    .unwrap()
                    .scale(&v((j[n - 1] + j[n]) as i32));
                assert_eq!(lhs, rhs, "n = {n}, r = {r}, j = {j:?}");
            }
        }
    }
}

#[test]
fn too_large_matrices_vanish() {
    let a = ThetaMatrix::zero(1).add_e_theta(2, 1, 2).unwrap();
    assert!(long_element(&a, &[0], 1).unwrap().is_zero());
}

#[test]
fn small_stability_grids() {
    for r in 1..=3 {
        let a = middle(1);
        for c in verify_r_stability(&LongGen::Middle, &a, &[1], &[r]).unwrap() {
            assert!(c.holds);
        }
    }
    for a in zero_diagonal_matrices(2, 1) {
        for c in verify_r_stability(&LongGen::Middle, &a, &[0, -1], &[2, 3]).unwrap() {
            assert!(c.holds, "{a:?} r = {}", c.r);
        }
    }
}

#[test]
fn divided_powers() {
    let d = divided_power(&LongGen::Raise(1), 2, 2, 2).unwrap();
    assert!(d.holds());
    let two_e = ThetaMatrix::zero(2).add_e_theta(1, 2, 2).unwrap();
    assert_eq!(d.expected, long_element(&two_e, &[0, 0], 2).unwrap());

    assert!(check_eae(1, 1, 2).unwrap());
    for m in 1..=3 {
        let p = t_power_expand(1, m).unwrap();
        assert!(t_power_shape(1, m, &p));
        assert!(check_t_power(1, m, 3).unwrap());
    }
}

#[test]
fn middle_square_is_not_a_divided_power() {
    // E(0)^2 at n = r = 1 is not divisible by [2]! = v + v^-1.
    let e = LongGen::Middle.element(1, 1).unwrap();
    let alg = SchurAlgebra::get(1, 1).unwrap();
    let sq = alg.product(&e, &e).unwrap();
    assert!(sq.div_exact(&qfactorial(2)).is_err());
}

#[test]
fn commutations() {
    assert!(commutation_checks(2, 1, &[1, 0], 2).unwrap().weight);
    let c = commutation_checks(3, 1, &[0, 0, 0], 2).unwrap();
    assert_eq!(c.raise, Some(true));
    assert_eq!(c.lower, Some(true));
    assert_eq!(commutation_checks(3, 2, &[0, 0, 0], 2).unwrap().raise, None);
}

#[test]
fn k_binomials() {
    let one = Composition::new(vec![1]).unwrap();
    assert_eq!(
        k_binomial(&one, 1).unwrap(),
        SchurElement::basis(&ThetaMatrix::diag(&[1, 1]).unwrap())
    );
    for lam in Composition::all(2, 2) {
        let d = ThetaMatrix::diag(&lam.hat()).unwrap();
        assert_eq!(k_binomial(&lam, 2).unwrap(), SchurElement::basis(&d));
    }
}

fn small_matrix() -> impl Strategy<Value = ThetaMatrix> {
    let all = zero_diagonal_matrices(2, 2);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn folding_is_invisible(a in small_matrix(), j in prop::collection::vec(-2i64..=2, 4), r in 2usize..=3) {
        prop_assert_eq!(long_element_full(&a, &j, r).unwrap(), long_element(&a, &fold(&j), r).unwrap());
    }

    #[test]
    fn evaluation_is_linear(
        a in small_matrix(),
        b in small_matrix(),
        j in prop::collection::vec(-1i64..=1, 2),
        c in -2i32..=2,
        r in 2usize..=3,
    ) {
        let x = FormalCombination::single(&a, &j, v(c));
        let y = FormalCombination::single(&b, &[0, 0], LaurentPoly::one());
        let sum = x.add(&y).evaluate(r).unwrap();
        let parts = x.evaluate(r).unwrap().add(&y.evaluate(r).unwrap()).unwrap();
        prop_assert_eq!(sum, parts);
        prop_assert_eq!(x.evaluate(r).unwrap(), long_element(&a, &j, r).unwrap().scale(&v(c)));
    }

    #[test]
    fn symbolic_rules_evaluate_correctly(
        a in small_matrix(),
        j in prop::collection::vec(-2i64..=2, 2),
        which in 0usize..3,
        r in 2usize..=3,
    ) {
        let gen = [LongGen::Middle, LongGen::Raise(1), LongGen::Lower(1)][which].clone();
        let symbolic = long_mul_symbolic(&gen, &a, &j).unwrap().evaluate(r).unwrap();
        prop_assert_eq!(symbolic, long_mul_evaluated(&gen, &a, &j, r).unwrap());
    }
}
