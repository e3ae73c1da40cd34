//! Skew-symmetric generators under an oriented involution.
//!
//! The skew elements are spanned by three families:
//!
//! * `L1`: `g - g^-1` for `g` in the kernel with `g^2 != 1`;
//! * `L2`: `g` outside the kernel with `g^2 = 1`;
//! * `L3`: `g + g^-1` outside the kernel with `g^2 != 1`.

use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::algebra::AlgebraElement;
use crate::error::{invalid, Error, Result};
use crate::groups::{FiniteGroup, Orientation};
use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SkewKind {
    L1,
    L2,
    L3,
}

impl SkewKind {
    /// The family `g` belongs to, if any (`None` for elements of the kernel
    /// with `g^2 = 1`, which contribute nothing).
    pub fn classify(g: usize, orientation: &Orientation) -> Option<SkewKind> {
        let group = orientation.group();
        let involutive = group.mul(g, g) == group.identity();
        match (orientation.in_kernel(g), involutive) {
            (true, false) => Some(SkewKind::L1),
            (false, true) => Some(SkewKind::L2),
            (false, false) => Some(SkewKind::L3),
            (true, true) => None,
        }
    }
}

impl fmt::Display for SkewKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SkewKind::L1 => "L1",
            SkewKind::L2 => "L2",
            SkewKind::L3 => "L3",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewGenerator {
    kind: SkewKind,
    base: usize,
    q: Rational,
}

impl SkewGenerator {
    /// Checks that `base` really belongs to `kind` under `orientation`.
    ///
    /// `L3` generators carry no parameter: only `g + g^-1` itself is
    /// supported, so `q` must be 1.
    pub fn new(kind: SkewKind, base: usize, q: Rational, orientation: &Orientation) -> Result<Self> {
        let group = orientation.group();
        if base >= group.order() {
            return Err(invalid(format!("element index {base} out of range")));
        }
        let actual = SkewKind::classify(base, orientation);
        if actual != Some(kind) {
            return Err(Error::WrongKind(format!(
                "{} is {} under {}, not {kind}",
                group.name(base),
                actual.map_or("not a skew generator".to_string(), |k| format!("of kind {k}")),
                orientation.describe(),
            )));
        }
        if kind == SkewKind::L3 && !q.is_one() {
            return Err(invalid(
                "L3 generators are only supported with q = 1; use the generic transform",
            ));
        }
        Ok(SkewGenerator { kind, base, q })
    }

    pub fn kind(&self) -> SkewKind {
        self.kind
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn with_q(&self, q: Rational) -> Self {
        SkewGenerator {
            q: if self.kind == SkewKind::L3 { Rational::one() } else { q },
            ..self.clone()
        }
    }

    /// `q(g - g^-1)`, `q·g` or `g + g^-1`.
    pub fn materialize(&self, group: &Arc<FiniteGroup>) -> AlgebraElement {
        let g = self.base;
        let inv = group.inv(g);
        match self.kind {
            SkewKind::L1 => {
                AlgebraElement::from_terms(group, [(g, self.q.clone()), (inv, -self.q.clone())])
            }
            SkewKind::L2 => AlgebraElement::term(group, g, self.q.clone()),
            SkewKind::L3 => {
                AlgebraElement::from_terms(group, [(g, Rational::one()), (inv, Rational::one())])
            }
        }
    }

    pub fn describe(&self, group: &FiniteGroup) -> String {
        let g = group.name(self.base);
        let ginv = group.name(group.inv(self.base));
        match self.kind {
            SkewKind::L1 => format!("{}*({g} - {ginv})", format_rational(&self.q)),
            SkewKind::L2 => format!("{}*{g}", format_rational(&self.q)),
            SkewKind::L3 => format!("{g} + {ginv}"),
        }
    }
}

/// One generator per pair `{g, g^-1}` (represented by the smaller index) in
/// the families `L1` and `L3`, plus every `L2` element, in index order, all
/// with `q = 1`.
pub fn skew_basis(orientation: &Orientation) -> Vec<SkewGenerator> {
    let group = orientation.group();
    (0..group.order())
        .filter(|&g| g <= group.inv(g))
        .filter_map(|g| {
            SkewKind::classify(g, orientation).map(|kind| SkewGenerator {
                kind,
                base: g,
                q: Rational::one(),
            })
        })
        .collect()
}
