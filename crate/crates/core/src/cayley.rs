//! Cayley unitary elements `u = (1 - β)(1 + β)^-1` built from skew `β`.
//!
//! The closed-form constructors place their coefficients on the cyclic
//! subgroup generated by the base element. In debug builds every closed form
//! is compared against the elimination oracle before it is returned.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::AlgebraElement;
use crate::error::{invalid, Error, Result};
use crate::exec::Exec;
use crate::groups::{FiniteGroup, Orientation};
use crate::linalg::oracle_inverse;
use crate::rational::{int, Rational};
use crate::sequences::{a_coeffs_classical, a_coeffs_oriented, b_from_a_classical, b_from_a_oriented};
use crate::skew::{SkewGenerator, SkewKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Oracle,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::ClosedForm => "closed-form",
            Method::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyResult {
    pub unit: AlgebraElement,
    pub beta: AlgebraElement,
    pub method: Method,
    pub inverse_of_one_plus_beta: AlgebraElement,
}

impl CayleyResult {
    /// Checks `unit = (1 - β)(1 + β)^-1` and `unit·unit^⊛ = 1`.
    pub fn is_consistent(&self, orientation: &Orientation) -> Result<bool> {
        let one = AlgebraElement::one(self.beta.group());
        let one_plus = one.checked_add(&self.beta)?;
        let one_minus = one.checked_sub(&self.beta)?;
        Ok(one_plus.checked_mul(&self.inverse_of_one_plus_beta)?.is_one()
            && one_minus.checked_mul(&self.inverse_of_one_plus_beta)? == self.unit
            && self.unit.is_unitary(orientation)?)
    }
}

/// The transform of an arbitrary skew `β` through the inverse oracle.
///
/// `Ok(None)` when `1 + β` is a zero divisor.
pub fn cayley_generic(beta: &AlgebraElement, orientation: &Orientation) -> Result<Option<CayleyResult>> {
    if !beta.is_skew(orientation)? {
        return Err(invalid(format!("{beta} is not skew under {}", orientation.describe())));
    }
    let group = beta.group();
    let one = AlgebraElement::one(group);
    let Some(inverse) = oracle_inverse(&(&one + beta)) else {
        return Ok(None);
    };
    let unit = &(&one - beta) * &inverse;
    assert!(
        unit.is_unitary(orientation)?,
        "Cayley transform of a skew element must be unitary"
    );
    Ok(Some(CayleyResult {
        unit,
        beta: beta.clone(),
        method: Method::Oracle,
        inverse_of_one_plus_beta: inverse,
    }))
}

/// Closed form for `β = q(x - x^-1)` with `σ(x) = +1` and `x` of order `> 2`.
pub fn cayley_l1(x: usize, q: &Rational, orientation: &Orientation) -> Result<CayleyResult> {
    let result = l1_closed(x, q, orientation)?;
    cross_check(&result, orientation);
    Ok(result)
}

/// Closed form for `β = q·x` with `x^2 = 1`, `σ(x) = -1`; `Ok(None)` for
/// `q = ±1`, where `1 + qx` is a zero divisor.
pub fn cayley_l2(x: usize, q: &Rational, orientation: &Orientation) -> Result<Option<CayleyResult>> {
    let result = l2_closed(x, q, orientation)?;
    if let Some(r) = &result {
        cross_check(r, orientation);
    }
    Ok(result)
}

/// Closed form for `β = x + x^-1` with `σ(x) = -1` and `x` of even order
/// `n >= 4`; `Ok(None)` when `n ≡ 0 (mod 6)`.
pub fn cayley_l3(x: usize, orientation: &Orientation) -> Result<Option<CayleyResult>> {
    let result = l3_closed(x, orientation)?;
    if let Some(r) = &result {
        cross_check(r, orientation);
    }
    Ok(result)
}

/// Dispatches on the generator's kind.
pub fn cayley_closed(generator: &SkewGenerator, orientation: &Orientation) -> Result<Option<CayleyResult>> {
    let result = closed_unchecked(generator, orientation)?;
    if let Some(r) = &result {
        cross_check(r, orientation);
    }
    Ok(result)
}

pub(crate) fn closed_unchecked(
    generator: &SkewGenerator,
    orientation: &Orientation,
) -> Result<Option<CayleyResult>> {
    match generator.kind() {
        SkewKind::L1 => l1_closed(generator.base(), generator.q(), orientation).map(Some),
        SkewKind::L2 => l2_closed(generator.base(), generator.q(), orientation),
        SkewKind::L3 => l3_closed(generator.base(), orientation),
    }
}

fn cross_check(result: &CayleyResult, orientation: &Orientation) {
    if cfg!(debug_assertions) {
        let oracle = cayley_generic(&result.beta, orientation)
            .expect("closed-form beta is skew")
            .expect("closed form exists only for invertible 1 + beta");
        assert_eq!(result.unit, oracle.unit, "closed form disagrees with oracle");
        assert_eq!(result.inverse_of_one_plus_beta, oracle.inverse_of_one_plus_beta);
    }
}

fn check_element(x: usize, orientation: &Orientation) -> Result<&Arc<FiniteGroup>> {
    let group = orientation.group();
    if x >= group.order() {
        return Err(invalid(format!("element index {x} out of range")));
    }
    Ok(group)
}

fn trivial_result(group: &Arc<FiniteGroup>) -> CayleyResult {
    CayleyResult {
        unit: AlgebraElement::one(group),
        beta: AlgebraElement::zero(group),
        method: Method::ClosedForm,
        inverse_of_one_plus_beta: AlgebraElement::one(group),
    }
}

fn l1_closed(x: usize, q: &Rational, orientation: &Orientation) -> Result<CayleyResult> {
    let group = check_element(x, orientation)?;
    let n = group.element_order(x);
    if n <= 2 {
        return Err(invalid(format!(
            "{} has order {n}; x - x^-1 needs order > 2",
            group.name(x)
        )));
    }
    if !orientation.in_kernel(x) {
        return Err(Error::WrongKind(format!(
            "{} has sign -1, so x - x^-1 is not skew",
            group.name(x)
        )));
    }
    if q.is_zero() {
        return Ok(trivial_result(group));
    }
    let a = a_coeffs_classical(n, q)?;
    let b = b_from_a_classical(&a, n, q)?;
    let beta = AlgebraElement::from_terms(group, [(x, q.clone()), (group.inv(x), -q.clone())]);
    Ok(CayleyResult {
        unit: AlgebraElement::on_powers(group, x, &b),
        beta,
        method: Method::ClosedForm,
        inverse_of_one_plus_beta: AlgebraElement::on_powers(group, x, &a),
    })
}

fn l2_closed(x: usize, q: &Rational, orientation: &Orientation) -> Result<Option<CayleyResult>> {
    let group = check_element(x, orientation)?;
    if x == group.identity() || group.mul(x, x) != group.identity() || orientation.in_kernel(x) {
        return Err(Error::WrongKind(format!(
            "{} is not an involution with sign -1",
            group.name(x)
        )));
    }
    let den = int(1) - q * q;
    if den.is_zero() {
        return Ok(None);
    }
    let inverse = AlgebraElement::from_terms(group, [(0, den.recip()), (x, -q / &den)]);
    let unit = AlgebraElement::from_terms(
        group,
        [(0, (int(1) + q * q) / &den), (x, int(-2) * q / &den)],
    );
    Ok(Some(CayleyResult {
        unit,
        beta: AlgebraElement::term(group, x, q.clone()),
        method: Method::ClosedForm,
        inverse_of_one_plus_beta: inverse,
    }))
}

fn l3_closed(x: usize, orientation: &Orientation) -> Result<Option<CayleyResult>> {
    let group = check_element(x, orientation)?;
    let n = group.element_order(x);
    if orientation.in_kernel(x) || n % 2 == 1 || n < 4 {
        return Err(Error::WrongKind(format!(
            "{} (order {n}, sign {:+}) is not an L3 base; need sign -1 and even order >= 4",
            group.name(x),
            orientation.sign(x)
        )));
    }
    let Some(a) = a_coeffs_oriented(n)? else {
        return Ok(None);
    };
    let b = b_from_a_oriented(&a);
    let beta = AlgebraElement::from_terms(group, [(x, Rational::one()), (group.inv(x), Rational::one())]);
    Ok(Some(CayleyResult {
        unit: AlgebraElement::on_powers(group, x, &b),
        beta,
        method: Method::ClosedForm,
        inverse_of_one_plus_beta: AlgebraElement::on_powers(group, x, &a),
    }))
}

/// For `x` of odd order `n > 1`, the skew element
/// `β = -(x - x^{n-1}) - (x^3 - x^{n-3}) - ... - (x^{n-2} - x^2)` whose
/// Cayley transform is `x` itself.
pub fn odd_order_beta(group: &Arc<FiniteGroup>, x: usize) -> Result<AlgebraElement> {
    let n = group.element_order(x);
    if n.is_multiple_of(2) || n == 1 {
        return Err(invalid(format!(
            "{} has order {n}; need odd order > 1",
            group.name(x)
        )));
    }
    let terms = (1..=n - 2).step_by(2).flat_map(|j| {
        [
            (group.pow(x, j as i64), int(-1)),
            (group.pow(x, (n - j) as i64), int(1)),
        ]
    });
    Ok(AlgebraElement::from_terms(group, terms))
}

/// `(1 + x)^-1 = ½ Σ (-1)^i x^i` when `x` has odd order, else `None`.
pub fn one_plus_x_inverse(group: &Arc<FiniteGroup>, x: usize) -> Option<AlgebraElement> {
    let n = group.element_order(x);
    if n.is_multiple_of(2) {
        return None;
    }
    let half = Rational::new(1.into(), 2.into());
    let coeffs: Vec<Rational> = (0..n)
        .map(|i| if i % 2 == 0 { half.clone() } else { -half.clone() })
        .collect();
    Some(AlgebraElement::on_powers(group, x, &coeffs))
}

/// A unitary `u` is a Cayley unit iff `1 + u` is invertible.
pub fn is_cayley_unit(u: &AlgebraElement, orientation: &Orientation) -> Result<bool> {
    if !u.is_unitary(orientation)? {
        return Ok(false);
    }
    let one = AlgebraElement::one(u.group());
    Ok(oracle_inverse(&(&one + u)).is_some())
}

/// Checks whether the skew `k` witnesses `u` as a product of two Cayley
/// units, i.e. whether `(1 + u) - (1 - u)k` is invertible.
///
/// A `false` answer says nothing about other choices of `k`.
pub fn is_product_two_cayley_witness(
    u: &AlgebraElement,
    k: &AlgebraElement,
    orientation: &Orientation,
) -> Result<bool> {
    if !u.is_unitary(orientation)? {
        return Err(invalid(format!("{u} is not unitary")));
    }
    if !k.is_skew(orientation)? {
        return Err(invalid(format!("{k} is not skew")));
    }
    let one = AlgebraElement::one(u.group());
    if oracle_inverse(&one.checked_add(k)?).is_none() {
        return Err(invalid(format!("1 + ({k}) is not invertible")));
    }
    let probe = (&one + u).checked_sub(&(&one - u).checked_mul(k)?)?;
    Ok(oracle_inverse(&probe).is_some())
}

/// Searches `k = Σ c_i·basis_i` with every `c_i` drawn from `grid` for a
/// product-of-two-Cayley witness. Exhaustive only over that finite grid; a
/// `None` is not a proof that no witness exists.
///
/// Fails if the grid has more than `max_candidates` points.
pub fn search_product_two_cayley(
    u: &AlgebraElement,
    basis: &[AlgebraElement],
    grid: &[Rational],
    orientation: &Orientation,
    max_candidates: usize,
    exec: Exec,
) -> Result<Option<AlgebraElement>> {
    if !u.is_unitary(orientation)? {
        return Err(invalid(format!("{u} is not unitary")));
    }
    let total = (grid.len() as u128).checked_pow(basis.len() as u32);
    if grid.is_empty() || total.is_none_or(|t| t > max_candidates as u128) {
        return Err(invalid("search grid is empty or too large"));
    }
    let total = total.unwrap() as usize;
    let group = u.group();
    let candidates: Vec<AlgebraElement> = (0..total)
        .map(|mut idx| {
            let mut k = AlgebraElement::zero(group);
            for b in basis {
                k = &k + &b.scalar_mul(&grid[idx % grid.len()]);
                idx /= grid.len();
            }
            k
        })
        .collect();
    let one = AlgebraElement::one(group);
    let one_plus = &one + u;
    let one_minus = &one - u;
    let hits = exec.map(&candidates, |k| {
        k.is_skew(orientation).unwrap_or(false)
            && oracle_inverse(&(&one + k)).is_some()
            && oracle_inverse(&(&one_plus - &(&one_minus * k))).is_some()
    });
    Ok(candidates.into_iter().zip(hits).find(|(_, hit)| *hit).map(|(k, _)| k))
}

/// Evaluates both sides of `(1 + y) - (1 - y)q(x - x^-1) = (1 - qx + qyx)(1 + y)`
/// in `QS3` and reports whether they agree.
pub fn s3_factorization_identity(q: &Rational) -> bool {
    let s3 = Arc::new(FiniteGroup::symmetric3());
    let x = s3.generator("x").expect("S3 has x");
    let y = s3.generator("y").expect("S3 has y");
    let e = |g| AlgebraElement::basis(&s3, g);
    let one = AlgebraElement::one(&s3);
    let one_plus_y = &one + &e(y);
    let skew = (&e(x) - &e(s3.inv(x))).scalar_mul(q);
    let lhs = &one_plus_y - &(&(&one - &e(y)) * &skew);
    let left_factor = &(&one - &e(x).scalar_mul(q)) + &e(s3.mul(y, x)).scalar_mul(q);
    let rhs = &left_factor * &one_plus_y;
    lhs == rhs
}
