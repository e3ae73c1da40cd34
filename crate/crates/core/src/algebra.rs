//! Elements of the rational group algebra `QG` and their arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Orientation};
use crate::rational::{format_rational, is_negative, parse_rational, Rational};

/// A finitely supported map from group elements to rationals.
///
/// Zero coefficients are never stored, so structural equality is algebraic
/// equality.
#[derive(Clone)]
pub struct AlgebraElement {
    group: Arc<FiniteGroup>,
    coeffs: BTreeMap<usize, Rational>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraElement {}

fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl AlgebraElement {
    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        AlgebraElement {
            group: group.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(group: &Arc<FiniteGroup>) -> Self {
        Self::scalar(group, Rational::one())
    }

    /// `c` times the identity.
    pub fn scalar(group: &Arc<FiniteGroup>, c: Rational) -> Self {
        Self::term(group, group.identity(), c)
    }

    /// The basis element `g`.
    pub fn basis(group: &Arc<FiniteGroup>, g: usize) -> Self {
        Self::term(group, g, Rational::one())
    }

    /// `c·g`.
    pub fn term(group: &Arc<FiniteGroup>, g: usize, c: Rational) -> Self {
        Self::from_terms(group, [(g, c)])
    }

    /// Sums the given terms; repeated indices accumulate.
    ///
    /// Panics if an index is out of range for the group.
    pub fn from_terms(
        group: &Arc<FiniteGroup>,
        terms: impl IntoIterator<Item = (usize, Rational)>,
    ) -> Self {
        let mut coeffs: BTreeMap<usize, Rational> = BTreeMap::new();
        for (g, c) in terms {
            assert!(g < group.order(), "element index {g} out of range");
            *coeffs.entry(g).or_insert_with(Rational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        AlgebraElement {
            group: group.clone(),
            coeffs,
        }
    }

    /// `Σ coeffs[i]·x^i`, placing a coefficient list on the powers of `x`.
    pub fn on_powers(group: &Arc<FiniteGroup>, x: usize, coeffs: &[Rational]) -> Self {
        let mut power = group.identity();
        let mut terms = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            terms.push((power, c.clone()));
            power = group.mul(power, x);
        }
        Self::from_terms(group, terms)
    }

    /// Reads a dense coefficient vector indexed by element.
    pub fn from_dense(group: &Arc<FiniteGroup>, dense: Vec<Rational>) -> Self {
        assert_eq!(dense.len(), group.order());
        Self::from_terms(group, dense.into_iter().enumerate())
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        let mut dense = vec![Rational::zero(); self.group.order()];
        for (&g, c) in &self.coeffs {
            dense[g] = c.clone();
        }
        dense
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Coefficient of `g` (zero when absent).
    pub fn coeff(&self, g: usize) -> Rational {
        self.coeffs.get(&g).cloned().unwrap_or_else(Rational::zero)
    }

    /// Non-zero terms in increasing element index.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(&g, c)| (g, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(self.group.identity()).is_one()
    }

    fn check_group(&self, other: &Self) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch {
                left: self.group.label().into(),
                right: other.group.label().into(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        let mut coeffs = self.coeffs.clone();
        for (&g, c) in &other.coeffs {
            *coeffs.entry(g).or_insert_with(Rational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(AlgebraElement {
            group: self.group.clone(),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    /// Convolution product `Σ_g Σ_h a_g b_h (gh)`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        let g = &self.group;
        // convolve integer numerators over a common denominator; reducing
        // once per output coefficient is far cheaper than once per term
        let (left, left_den) = self.integer_terms();
        let (right, right_den) = other.integer_terms();
        let mut acc = vec![BigInt::zero(); g.order()];
        for (a, na) in &left {
            for (b, nb) in &right {
                acc[g.mul(*a, *b)] += na * nb;
            }
        }
        let den = left_den * right_den;
        Ok(Self::from_terms(
            g,
            acc.into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, Rational::new(v, den.clone()))),
        ))
    }

    fn integer_terms(&self) -> (Vec<(usize, BigInt)>, BigInt) {
        let den = self
            .coeffs
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let terms = self
            .coeffs
            .iter()
            .map(|(&g, c)| (g, c.numer() * (&den / c.denom())))
            .collect();
        (terms, den)
    }

    pub fn scalar_mul(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.group);
        }
        AlgebraElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|(&g, v)| (g, v * c)).collect(),
        }
    }

    fn neg_ref(&self) -> Self {
        AlgebraElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|(&g, v)| (g, -v)).collect(),
        }
    }

    /// The classical involution: the linear extension of `g -> g^-1`.
    pub fn involute_classical(&self) -> Self {
        let g = &self.group;
        AlgebraElement {
            group: g.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(&h, c)| (g.inv(h), c.clone()))
                .collect(),
        }
    }

    /// The oriented involution `Σ a_g g -> Σ a_g σ(g) g^-1`.
    pub fn involute_oriented(&self, orientation: &Orientation) -> Result<Self> {
        self.check_orientation(orientation)?;
        let g = &self.group;
        Ok(AlgebraElement {
            group: g.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(&h, c)| {
                    let c = if orientation.sign(h) < 0 { -c } else { c.clone() };
                    (g.inv(h), c)
                })
                .collect(),
        })
    }

    pub(crate) fn check_orientation(&self, orientation: &Orientation) -> Result<()> {
        if same_group(&self.group, orientation.group()) {
            Ok(())
        } else {
            Err(Error::GroupMismatch {
                left: self.group.label().into(),
                right: orientation.group().label().into(),
            })
        }
    }

    /// True iff `self^⊛ = -self`.
    pub fn is_skew(&self, orientation: &Orientation) -> Result<bool> {
        Ok(self.involute_oriented(orientation)? == self.neg_ref())
    }

    pub fn is_symmetric(&self, orientation: &Orientation) -> Result<bool> {
        Ok(self.involute_oriented(orientation)? == *self)
    }

    /// True iff `u·u^⊛ = 1 = u^⊛·u`.
    pub fn is_unitary(&self, orientation: &Orientation) -> Result<bool> {
        let star = self.involute_oriented(orientation)?;
        Ok(self.checked_mul(&star)?.is_one() && star.checked_mul(self)?.is_one())
    }

    /// Serializable canonical form, coefficients sorted by element index.
    pub fn to_canonical(&self) -> CanonicalElement {
        CanonicalElement {
            group: self.group.label().to_string(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(&g, c)| CanonicalTerm {
                    elem: self.group.name(g).to_string(),
                    value: format_rational(c),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_canonical()).expect("canonical form serializes")
    }

    /// Inverse of [`to_canonical`](Self::to_canonical); element words are
    /// looked up by their canonical names in `group`.
    pub fn from_canonical(group: &Arc<FiniteGroup>, canonical: &CanonicalElement) -> Result<Self> {
        if canonical.group != group.label() {
            return Err(Error::GroupMismatch {
                left: canonical.group.clone(),
                right: group.label().into(),
            });
        }
        let mut terms = Vec::with_capacity(canonical.coeffs.len());
        for t in &canonical.coeffs {
            let g = group
                .element_by_name(&t.elem)
                .ok_or_else(|| crate::error::invalid(format!("unknown element {:?}", t.elem)))?;
            let c = parse_rational(&t.value)
                .ok_or_else(|| crate::error::invalid(format!("bad rational {:?}", t.value)))?;
            terms.push((g, c));
        }
        Ok(Self::from_terms(group, terms))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalElement {
    pub group: String,
    pub coeffs: Vec<CanonicalTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalTerm {
    pub elem: String,
    pub value: String,
}

/// Renders `-1/3 + 2/3*x - 4/3*x^2`; the output parses back to the same
/// element with the CLI expression grammar.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (&g, c)) in self.coeffs.iter().enumerate() {
            let negative = is_negative(c);
            let magnitude = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if g == self.group.identity() {
                f.write_str(&format_rational(&magnitude))?;
            } else if magnitude.is_one() {
                f.write_str(self.group.name(g))?;
            } else {
                write!(f, "{}*{}", format_rational(&magnitude), self.group.name(g))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.group.label(), self)
    }
}

// Operator forms panic on a group mismatch; use the `checked_*` methods when
// operands may come from different groups.
impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_add(rhs).expect("group mismatch in +")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_sub(rhs).expect("group mismatch in -")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_mul(rhs).expect("group mismatch in *")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.neg_ref()
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn cyclic(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(n).unwrap())
    }

    fn powers(g: &Arc<FiniteGroup>, coeffs: &[(i64, i64)]) -> AlgebraElement {
        let cs: Vec<Rational> = coeffs.iter().map(|&(p, q)| rat(p, q)).collect();
        AlgebraElement::on_powers(g, 1, &cs)
    }

    #[test]
    fn addition() {
        let c4 = cyclic(4);
        let x = AlgebraElement::basis(&c4, 1);
        let a = powers(&c4, &[(1, 1), (1, 1)]);
        assert_eq!(&a + &AlgebraElement::zero(&c4), a);
        assert!((&x + &(-&x)).is_zero());
        let b = powers(&c4, &[(1, 1), (-1, 1)]);
        assert_eq!(&a + &b, AlgebraElement::scalar(&c4, int(2)));
    }

    #[test]
    fn mismatched_groups_are_rejected() {
        let a = AlgebraElement::one(&cyclic(3));
        let b = AlgebraElement::one(&cyclic(4));
        assert!(matches!(a.checked_add(&b), Err(Error::GroupMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(Error::GroupMismatch { .. })));
        // structurally equal groups built separately are compatible
        assert!(a.checked_mul(&AlgebraElement::one(&cyclic(3))).is_ok());
    }

    #[test]
    fn odd_order_one_plus_x_inverse_product() {
        let c3 = cyclic(3);
        let one_plus_x = powers(&c3, &[(1, 1), (1, 1)]);
        let half_alt = powers(&c3, &[(1, 2), (-1, 2), (1, 2)]);
        assert!((&one_plus_x * &half_alt).is_one());
        assert_eq!(&one_plus_x * &AlgebraElement::one(&c3), one_plus_x);
    }

    #[test]
    fn s3_factorization_at_q_one() {
        let s3 = Arc::new(FiniteGroup::symmetric3());
        let x = s3.generator("x").unwrap();
        let y = s3.generator("y").unwrap();
        let e = |g| AlgebraElement::basis(&s3, g);
        let one = AlgebraElement::one(&s3);
        let skew = &e(x) - &e(s3.inv(x));
        let lhs = &(&one + &e(y)) - &(&(&one - &e(y)) * &skew);
        let rhs = &(&(&one - &e(x)) + &e(s3.mul(y, x))) * &(&one + &e(y));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn scalar_multiplication() {
        let c3 = cyclic(3);
        let a = AlgebraElement::term(&c3, 1, int(3));
        assert!(a.scalar_mul(&int(0)).is_zero());
        assert_eq!(a.scalar_mul(&int(1)), a);
        assert_eq!(a.scalar_mul(&rat(2, 3)), AlgebraElement::term(&c3, 1, int(2)));
    }

    #[test]
    fn classical_involution() {
        let c5 = cyclic(5);
        let a = powers(&c5, &[(0, 1), (1, 1), (2, 1)]);
        let expected = AlgebraElement::from_terms(&c5, [(4, int(1)), (3, int(2))]);
        assert_eq!(a.involute_classical(), expected);
        assert!(AlgebraElement::one(&c5).involute_classical().is_one());
    }

    #[test]
    fn oriented_involution() {
        let s3 = Arc::new(FiniteGroup::symmetric3());
        let o = Orientation::from_generators(s3.clone(), &[("x", 1), ("y", -1)]).unwrap();
        let y = AlgebraElement::basis(&s3, s3.generator("y").unwrap());
        assert_eq!(y.involute_oriented(&o).unwrap(), -&y);
        assert!(AlgebraElement::one(&s3).involute_oriented(&o).unwrap().is_one());

        let c10 = cyclic(10);
        let o = Orientation::from_generators(c10.clone(), &[("x", -1)]).unwrap();
        let b = AlgebraElement::from_terms(&c10, [(1, int(1)), (9, int(1))]);
        assert_eq!(b.involute_oriented(&o).unwrap(), -&b);

        let other = Orientation::classical(cyclic(4));
        assert!(b.involute_oriented(&other).is_err());
    }

    #[test]
    fn skewness_and_unitarity() {
        let c4 = cyclic(4);
        let o = Orientation::classical(c4.clone());
        assert!(AlgebraElement::zero(&c4).is_skew(&o).unwrap());
        assert!(powers(&c4, &[(0, 1), (1, 1), (0, 1), (-1, 1)]).is_skew(&o).unwrap());
        assert!(!AlgebraElement::one(&c4).is_skew(&o).unwrap());

        assert!(AlgebraElement::one(&c4).is_unitary(&o).unwrap());
        assert!(!AlgebraElement::scalar(&c4, int(2)).is_unitary(&o).unwrap());

        let s3 = Arc::new(FiniteGroup::symmetric3());
        let o = Orientation::from_generators(s3.clone(), &[("x", 1), ("y", -1)]).unwrap();
        for g in o.kernel() {
            assert!(AlgebraElement::basis(&s3, g).is_unitary(&o).unwrap());
        }
    }

    #[test]
    fn display_and_json() {
        let c4 = cyclic(4);
        let u = powers(&c4, &[(-1, 3), (2, 3), (-4, 3), (2, 3)]);
        assert_eq!(u.to_string(), "-1/3 + 2/3*x - 4/3*x^2 + 2/3*x^3");
        assert_eq!(AlgebraElement::zero(&c4).to_string(), "0");
        assert_eq!(
            powers(&c4, &[(0, 1), (1, 1), (-1, 1)]).to_string(),
            "x - x^2"
        );
        let json = powers(&c4, &[(3, 1), (0, 1), (-1, 2)]).to_json();
        assert_eq!(
            json,
            r#"{"group":"C4","coeffs":[{"elem":"1","value":"3"},{"elem":"x^2","value":"-1/2"}]}"#
        );
        let back: CanonicalElement = serde_json::from_str(&json).unwrap();
        assert_eq!(
            AlgebraElement::from_canonical(&c4, &back).unwrap(),
            powers(&c4, &[(3, 1), (0, 1), (-1, 2)])
        );
    }
}
