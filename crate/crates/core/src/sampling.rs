//! Random elements for property checks.

use std::sync::Arc;

use rand::Rng;

use crate::algebra::AlgebraElement;
use crate::groups::{FiniteGroup, Orientation};
use crate::rational::{rat, Rational};
use crate::skew::skew_basis;

/// `p/q` with `|p| <= max_num` and `1 <= q <= max_den`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    rat(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den))
}

/// An element with roughly `density` of its coefficients non-zero.
pub fn random_element<R: Rng + ?Sized>(
    group: &Arc<FiniteGroup>,
    rng: &mut R,
    density: f64,
) -> AlgebraElement {
    let mut terms: Vec<(usize, Rational)> = Vec::new();
    for g in 0..group.order() {
        if rng.gen_bool(density) {
            terms.push((g, random_rational(rng, 5, 4)));
        }
    }
    AlgebraElement::from_terms(group, terms)
}

/// A random rational combination of the skew basis.
pub fn random_skew<R: Rng + ?Sized>(orientation: &Orientation, rng: &mut R) -> AlgebraElement {
    let group = orientation.group();
    let mut acc = AlgebraElement::zero(group);
    for gen in skew_basis(orientation) {
        if rng.gen_bool(0.6) {
            acc = &acc + &gen.materialize(group).scalar_mul(&random_rational(rng, 4, 3));
        }
    }
    acc
}
