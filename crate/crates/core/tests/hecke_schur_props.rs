use ischur_core::hecke::{double_coset_sum, phi_apply, x_lambda, ModuleElement};
use ischur_core::schur::formulas::{
    beta, beta_prime, c_coefficient, generator_matrix, short_mul, Kind,
};
use ischur_core::schur::order::{preorder_leq, preorder_leq_half};
use ischur_core::schur::triangular::triangular_monomial;
use ischur_core::{
    Composition, HeckeElement, LaurentPoly, SchurAlgebra, SchurElement, ThetaMatrix, WeylElement,
    WeylGroup,
};
use proptest::prelude::*;

fn t(word: &[usize], r: usize) -> HeckeElement {
    HeckeElement::from_element(&WeylElement::from_word(word, r).unwrap()).unwrap()
}

fn v(e: i32) -> LaurentPoly {
    LaurentPoly::v_pow(e)
}

fn m(rows: &[&[u32]]) -> ThetaMatrix {
    ThetaMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

#[test]
fn hecke_relations() {
    for r in [2, 3] {
        let q = v(2);
        let s = t(&[r], r);
        let quad = s
            .scale(&(&q - &LaurentPoly::one()))
            .add(&t(&[], r).scale(&q))
            .unwrap();
        assert_eq!(s.mul(&s).unwrap(), quad);
        assert_eq!(
            t(&[r - 1, r, r - 1, r], r),
            t(&[r], r)
                .mul(&t(&[r - 1], r))
                .unwrap()
                .mul(&t(&[r], r))
                .unwrap()
                .mul(&t(&[r - 1], r))
                .unwrap()
        );
    }
    let lhs = t(&[1], 2)
        .mul(&t(&[2], 2))
        .unwrap()
        .mul(&t(&[1], 2))
        .unwrap();
    let rhs = t(&[1], 2)
        .mul(&t(&[2], 2).mul(&t(&[1], 2)).unwrap())
        .unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn parabolic_sums_absorb_generators() {
    let lam = Composition::new(vec![2]).unwrap();
    let x = x_lambda(&lam).unwrap();
    assert_eq!(x.mul(&t(&[1], 2)).unwrap(), x.scale(&v(2)));
}

#[test]
fn coset_sums_have_unit_coefficients() {
    for r in 1..=3 {
        let g = WeylGroup::get(r).unwrap();
        for n in 1..=3 {
            for mu in Composition::all(n, r) {
                let x = x_lambda(&mu).unwrap();
                for d in g.min_right_coset_reps(&mu).unwrap() {
                    let xd = x.mul(&HeckeElement::basis(r, d)).unwrap();
                    let coset: Vec<u32> = g
                        .parabolic(&mu)
                        .unwrap()
                        .iter()
                        .map(|&w| g.compose(w, d))
                        .collect();
                    assert_eq!(xd, HeckeElement::sum_of(r, &coset));
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn hecke_associativity(a in 0u32..48, b in 0u32..48, c in 0u32..48, e in -2i32..=2) {
        let (ta, tb, tc) = (
            HeckeElement::monomial(3, a, v(e)),
            HeckeElement::basis(3, b),
            HeckeElement::basis(3, c).add(&HeckeElement::basis(3, a)).unwrap(),
        );
        prop_assert_eq!(ta.mul(&tb).unwrap().mul(&tc).unwrap(), ta.mul(&tb.mul(&tc).unwrap()).unwrap());
    }

    #[test]
    fn phi_is_a_module_map(k in 0usize..36, w in 0u32..8, h in 0u32..8) {
        let alg = SchurAlgebra::get(2, 2).unwrap();
        let data = alg.basis_data(k as u32);
        let lam = &alg.compositions()[data.lambda];
        let mu = &alg.compositions()[data.mu];
        let x = x_lambda(mu).unwrap().mul(&HeckeElement::basis(2, w)).unwrap();
        let th = HeckeElement::basis(2, h);
        let apply = |value: HeckeElement| {
            phi_apply(lam, data.d, mu, &ModuleElement { lambda: mu.clone(), value }).unwrap()
        };
        prop_assert_eq!(apply(x.mul(&th).unwrap()), apply(x).mul(&th).unwrap());
    }

    #[test]
    fn schur_associativity(a in 0u32..36, b in 0u32..36, c in 0u32..36) {
        let alg = SchurAlgebra::get(2, 2).unwrap();
        let e = |i: u32| SchurElement::basis(&alg.basis_data(i).matrix);
        let left = alg.product(&alg.product(&e(a), &e(b)).unwrap(), &e(c)).unwrap();
        let right = alg.product(&e(a), &alg.product(&e(b), &e(c)).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn beta_symmetry_in_the_middle(k in 0usize..36, p in 1usize..=4) {
        let a = SchurAlgebra::get(2, 2).unwrap().basis_data(k as u32).matrix.clone();
        prop_assert_eq!(beta_prime(&a, 2, p), beta(&a, 2, 5 - p));
    }
}

#[test]
fn weight_idempotents_and_zero_products() {
    let alg = SchurAlgebra::get(2, 2).unwrap();
    for a in alg.basis_matrices() {
        let ro = ThetaMatrix::diag(&a.ro()).unwrap();
        assert_eq!(
            alg.structure_constant(&ro, &a).unwrap(),
            SchurElement::basis(&a)
        );
        for b in alg.basis_matrices() {
            if a.co() != b.ro() {
                assert!(alg.structure_constant(&a, &b).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn middle_square_at_rank_one() {
    let e = m(&[&[0, 1], &[1, 0]]);
    let one = m(&[&[1, 0], &[0, 1]]);
    let frozen = SchurElement::monomial(&e, v(1) - v(-1))
        .add(&SchurElement::basis(&one))
        .unwrap();

    // Independently: W = {id, s}, W_(1) is trivial, [E] = v^-1 phi with
    // phi(T_id) = T_s, so [E]^2 sends T_id to v^-2 T_s T_s.
    let ts = t(&[1], 1);
    let image = ts.mul(&ts).unwrap().scale(&v(-2));
    let g = WeylGroup::get(1).unwrap();
    let s = g
        .index_of(&WeylElement::from_word(&[1], 1).unwrap())
        .unwrap();
    let id = g.index_of(&WeylElement::identity(1)).unwrap();
    // T_s = v [E](T_id) and T_id = [diag(1,1)](T_id).
    assert_eq!(image.coeff(s) * v(1), frozen.coeff(&e));
    assert_eq!(image.coeff(id), frozen.coeff(&one));

    assert_eq!(
        SchurAlgebra::get(1, 1)
            .unwrap()
            .structure_constant(&e, &e)
            .unwrap(),
        frozen
    );
    let lam = Composition::new(vec![0]).unwrap();
    assert_eq!(short_mul(Kind::Theta, 1, &lam, &e).unwrap(), frozen);
}

#[test]
fn normalization_exponents() {
    let a1 = SchurAlgebra::get(1, 1).unwrap();
    let i = a1.index_of(&m(&[&[0, 1], &[1, 0]])).unwrap();
    assert_eq!(a1.basis_data(i).exponent, -1);
    let a2 = SchurAlgebra::get(1, 2).unwrap();
    let i = a2.index_of(&m(&[&[2, 0], &[0, 2]])).unwrap();
    assert_eq!(a2.basis_data(i).exponent, 0);
    let lam = Composition::new(vec![1]).unwrap();
    let d = a1
        .basis_data(a1.index_of(&m(&[&[0, 1], &[1, 0]])).unwrap())
        .d;
    assert_eq!(
        double_coset_sum(&lam, d, &lam).unwrap(),
        HeckeElement::from_element(&WeylElement::from_word(&[1], 1).unwrap()).unwrap()
    );
}

#[test]
fn short_formula_examples() {
    let zero = Composition::new(vec![0, 0]).unwrap();
    let a = generator_matrix(Kind::Lower, 1, 1, &zero);
    let expect = SchurElement::basis(&ThetaMatrix::diag(&[1, 0, 0, 1]).unwrap());
    assert_eq!(short_mul(Kind::Raise, 1, &zero, &a).unwrap(), expect);
    assert_eq!(
        SchurAlgebra::get(2, 1)
            .unwrap()
            .structure_constant(&generator_matrix(Kind::Raise, 1, 1, &zero), &a)
            .unwrap(),
        expect
    );

    for k in 1..4 {
        let a = m(&[&[0, k], &[k, 0]]);
        assert_eq!(c_coefficient(&a), v(k as i32) - v(-(k as i32)));
    }
}

#[test]
fn two_forms_of_the_preorder_agree() {
    let b = SchurAlgebra::get(2, 2).unwrap().basis_matrices();
    for x in &b {
        for y in &b {
            assert_eq!(preorder_leq(x, y), preorder_leq_half(x, y));
        }
    }
}

#[test]
fn single_factor_monomial() {
    let alg = SchurAlgebra::get(1, 1).unwrap();
    let e = m(&[&[0, 1], &[1, 0]]);
    assert_eq!(
        triangular_monomial(&alg, &e).unwrap(),
        SchurElement::basis(&e)
    );
}
