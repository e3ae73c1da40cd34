use std::sync::Arc;

use cayley_core::cayley::cayley_generic;
use cayley_core::linalg::{oracle_inverse, regular_representation, Matrix};
use cayley_core::rational::rat;
use cayley_core::skew::skew_basis;
use cayley_core::{AlgebraElement, FiniteGroup, Orientation, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn orientations() -> Vec<Orientation> {
    let d4 = Arc::new(FiniteGroup::dihedral4());
    let q8 = Arc::new(FiniteGroup::quaternion8());
    let s3 = Arc::new(FiniteGroup::symmetric3());
    let c8 = Arc::new(FiniteGroup::cyclic(8).unwrap());
    let c6 = Arc::new(FiniteGroup::cyclic(6).unwrap());
    vec![
        Orientation::from_generators(d4.clone(), &[("x", 1), ("y", -1)]).unwrap(),
        Orientation::from_generators(d4.clone(), &[("x", -1), ("y", 1)]).unwrap(),
        Orientation::from_generators(d4, &[("x", -1), ("y", -1)]).unwrap(),
        Orientation::from_generators(q8.clone(), &[("x", 1), ("y", -1)]).unwrap(),
        Orientation::from_generators(q8, &[("x", -1), ("y", -1)]).unwrap(),
        Orientation::from_generators(s3.clone(), &[("x", 1), ("y", -1)]).unwrap(),
        Orientation::classical(s3),
        Orientation::from_generators(c8, &[("x", -1)]).unwrap(),
        Orientation::from_generators(c6, &[("x", -1)]).unwrap(),
        Orientation::classical(Arc::new(FiniteGroup::cyclic(5).unwrap())),
    ]
}

/// Dense coefficients for groups of order at most 8; extra entries are
/// dropped, and roughly half are zero.
fn coeffs() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(
        prop_oneof![Just((0i64, 1i64)), (-5i64..=5, 1i64..=4)],
        8,
    )
    .prop_map(|v| v.into_iter().map(|(p, q)| rat(p, q)).collect())
}

fn element(o: &Orientation, c: &[Rational]) -> AlgebraElement {
    let g = o.group();
    AlgebraElement::from_terms(g, c.iter().take(g.order()).cloned().enumerate())
}

fn skew_combination(o: &Orientation, c: &[Rational]) -> AlgebraElement {
    let g = o.group();
    skew_basis(o)
        .iter()
        .zip(c)
        .fold(AlgebraElement::zero(g), |acc, (s, q)| {
            &acc + &s.materialize(g).scalar_mul(q)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn oriented_involution_is_an_anti_automorphism(i in 0usize..10, a in coeffs(), b in coeffs()) {
        let o = &orientations()[i];
        let (a, b) = (element(o, &a), element(o, &b));
        let star = |e: &AlgebraElement| e.involute_oriented(o).unwrap();
        prop_assert_eq!(star(&(&a * &b)), &star(&b) * &star(&a));
        prop_assert_eq!(star(&star(&a)), a.clone());
        prop_assert_eq!(star(&(&a + &b)), &star(&a) + &star(&b));
        prop_assert_eq!(a.involute_classical().involute_classical(), a.clone());
        prop_assert_eq!((&a * &b).involute_classical(), &b.involute_classical() * &a.involute_classical());
    }

    #[test]
    fn difference_with_involution_is_skew(i in 0usize..10, a in coeffs()) {
        let o = &orientations()[i];
        let a = element(o, &a);
        let skew = &a - &a.involute_oriented(o).unwrap();
        prop_assert!(skew.is_skew(o).unwrap());
    }

    #[test]
    fn skew_basis_spans_skew_elements(i in 0usize..10, a in coeffs()) {
        let o = &orientations()[i];
        let g = o.group();
        let a = element(o, &a);
        let skew = &a - &a.involute_oriented(o).unwrap();
        let columns: Vec<Vec<Rational>> = skew_basis(o)
            .iter()
            .map(|s| s.materialize(g).to_dense())
            .collect();
        let m = Matrix::from_columns(&columns);
        let coords = m.solve(&skew.to_dense());
        prop_assert!(coords.is_some());
        prop_assert_eq!(m.mul_vec(&coords.unwrap()), skew.to_dense());
    }

    #[test]
    fn regular_representation_is_multiplicative(i in 0usize..10, a in coeffs(), b in coeffs()) {
        let o = &orientations()[i];
        let (a, b) = (element(o, &a), element(o, &b));
        prop_assert_eq!(
            &regular_representation(&a) * &regular_representation(&b),
            regular_representation(&(&a * &b))
        );
    }

    #[test]
    fn determinant_detects_invertibility(i in 0usize..10, a in coeffs()) {
        let o = &orientations()[i];
        let a = element(o, &a);
        let det = regular_representation(&a).determinant();
        let inv = oracle_inverse(&a);
        prop_assert_eq!(det.is_zero(), inv.is_none());
        if let Some(inv) = inv {
            prop_assert!((&a * &inv).is_one());
            prop_assert!((&inv * &a).is_one());
        }
    }

    #[test]
    fn one_plus_and_one_minus_skew_are_invertible_together(i in 0usize..10, c in coeffs()) {
        let o = &orientations()[i];
        let beta = skew_combination(o, &c);
        let one = AlgebraElement::one(o.group());
        prop_assert_eq!(
            oracle_inverse(&(&one + &beta)).is_some(),
            oracle_inverse(&(&one - &beta)).is_some()
        );
    }

    #[test]
    fn cayley_of_negation_is_inverse(i in 0usize..10, c in coeffs()) {
        let o = &orientations()[i];
        let beta = skew_combination(o, &c);
        if let Some(u) = cayley_generic(&beta, o).unwrap() {
            let v = cayley_generic(&-&beta, o).unwrap().expect("1 - beta invertible too");
            prop_assert!((&u.unit * &v.unit).is_one());
            prop_assert!((&v.unit * &u.unit).is_one());
            prop_assert!(u.is_consistent(o).unwrap());
        }
    }

    #[test]
    fn orientation_kernel_has_index_two(i in 0usize..10) {
        let o = &orientations()[i];
        let g = o.group();
        if !o.is_trivial() {
            let kernel = o.kernel();
            prop_assert_eq!(kernel.len() * 2, g.order());
            for &a in &kernel {
                prop_assert!(o.in_kernel(g.inv(a)));
                for &b in &kernel {
                    prop_assert!(o.in_kernel(g.mul(a, b)));
                }
            }
        }
        for a in 0..g.order() {
            prop_assert_eq!(o.sign(a), o.sign(g.inv(a)));
        }
    }
}
