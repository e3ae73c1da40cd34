//! Batch comparison of the closed-form Cayley constructors against the
//! elimination oracle over the group catalog.

use std::sync::Arc;

use num_traits::One;

use crate::algebra::AlgebraElement;
use crate::cayley::{cayley_generic, closed_unchecked};
use crate::exec::Exec;
use crate::groups::{FiniteGroup, Orientation};
use crate::rational::{format_rational, int, rat, Rational};
use crate::skew::{skew_basis, SkewGenerator, SkewKind};

#[derive(Debug, Clone)]
pub struct SweepCase {
    pub orientation: Orientation,
    pub generator: SkewGenerator,
}

impl SweepCase {
    pub fn label(&self) -> String {
        let group = self.orientation.group();
        format!(
            "{} [{}] {} {} q={}",
            group.label(),
            self.orientation.describe(),
            self.generator.kind(),
            group.name(self.generator.base()),
            format_rational(self.generator.q()),
        )
    }
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub label: String,
    pub closed: Option<AlgebraElement>,
    pub oracle: Option<AlgebraElement>,
    /// Closed form and oracle give the same unit, or both report that
    /// `1 + β` is singular.
    pub agrees: bool,
    /// `u·u^⊛ = 1` holds exactly (vacuously true when singular).
    pub unitary: bool,
}

impl SweepOutcome {
    pub fn passed(&self) -> bool {
        self.agrees && self.unitary
    }
}

/// `1, -1, 2, 1/2, -3`.
pub fn default_q_grid() -> Vec<Rational> {
    vec![int(1), int(-1), int(2), rat(1, 2), int(-3)]
}

/// The catalog orientations: the classical involution on every group, plus
/// each non-trivial generator assignment on `C_n` (even `n`), `D4`, `Q8` and
/// `S3`.
pub fn catalog_orientations(max_cyclic: usize) -> Vec<Orientation> {
    let mut out = Vec::new();
    for n in 3..=max_cyclic {
        let g = Arc::new(FiniteGroup::cyclic(n).expect("n >= 3"));
        out.push(Orientation::classical(g.clone()));
        if n % 2 == 0 {
            out.push(Orientation::from_generators(g, &[("x", -1)]).expect("even order"));
        }
    }
    for group in [FiniteGroup::dihedral4(), FiniteGroup::quaternion8()] {
        let g = Arc::new(group);
        out.push(Orientation::classical(g.clone()));
        for (sx, sy) in [(1, -1), (-1, 1), (-1, -1)] {
            out.push(Orientation::from_generators(g.clone(), &[("x", sx), ("y", sy)]).unwrap());
        }
    }
    let s3 = Arc::new(FiniteGroup::symmetric3());
    out.push(Orientation::classical(s3.clone()));
    out.push(Orientation::from_generators(s3, &[("x", 1), ("y", -1)]).unwrap());
    out
}

/// Every skew basis generator of every orientation, at every admissible `q`:
/// the whole grid for `L1`, the grid minus `-1` for `L2`, and `q = 1` for `L3`.
pub fn catalog_cases(orientations: &[Orientation], q_grid: &[Rational]) -> Vec<SweepCase> {
    let mut cases = Vec::new();
    for o in orientations {
        for gen in skew_basis(o) {
            let qs: Vec<Rational> = match gen.kind() {
                SkewKind::L1 => q_grid.to_vec(),
                SkewKind::L2 => q_grid.iter().filter(|q| **q != int(-1)).cloned().collect(),
                SkewKind::L3 => vec![Rational::one()],
            };
            for q in qs {
                cases.push(SweepCase {
                    orientation: o.clone(),
                    generator: gen.with_q(q),
                });
            }
        }
    }
    cases
}

pub fn evaluate(case: &SweepCase) -> SweepOutcome {
    let o = &case.orientation;
    let beta = case.generator.materialize(o.group());
    let closed = closed_unchecked(&case.generator, o).expect("catalog generators are well-formed");
    let oracle = cayley_generic(&beta, o).expect("materialized generators are skew");
    let agrees = match (&closed, &oracle) {
        (Some(c), Some(g)) => c.unit == g.unit && c.inverse_of_one_plus_beta == g.inverse_of_one_plus_beta,
        (None, None) => true,
        _ => false,
    };
    let unitary = closed
        .as_ref()
        .is_none_or(|c| c.unit.is_unitary(o).unwrap_or(false));
    SweepOutcome {
        label: case.label(),
        closed: closed.map(|c| c.unit),
        oracle: oracle.map(|c| c.unit),
        agrees,
        unitary,
    }
}

pub fn run(cases: &[SweepCase], exec: Exec) -> Vec<SweepOutcome> {
    exec.map(cases, evaluate)
}
