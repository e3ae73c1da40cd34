//! The `verify` command: self-checks of the library against the published
//! worked examples and against independent recomputation.

use std::sync::Arc;

use cayley_core::cayley::{
    cayley_l1, cayley_l2, cayley_l3, is_product_two_cayley_witness, odd_order_beta,
    s3_factorization_identity,
};
use cayley_core::linalg::{oracle_inverse, regular_representation};
use cayley_core::rational::{format_rational, int, rat};
use cayley_core::sampling::{random_element, random_rational, random_skew};
use cayley_core::sequences::{
    a_closed_oriented, a_coeffs_classical, a_coeffs_oriented, c_seq, fibonacci, g_closed, g_seq,
    satisfies_oriented_system, OrientedBranch,
};
use cayley_core::sweep::{catalog_cases, catalog_orientations, default_q_grid, run};
use cayley_core::{AlgebraElement, Exec, FiniteGroup, Orientation, Rational};
use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::commands::table_rows;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Involutions,
    Sequences,
    Table,
    Examples,
    Counterexample,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(suite: &'static str, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            suite,
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Settings for the randomized checks.
#[derive(Debug, Clone, Copy)]
pub struct RandomConfig {
    pub seed: u64,
    pub cases: usize,
}

impl Default for RandomConfig {
    fn default() -> Self {
        RandomConfig { seed: 0xC0FFEE, cases: 200 }
    }
}

pub fn run_suite(suite: Suite, random: RandomConfig) -> Vec<Check> {
    match suite {
        Suite::All => [
            Suite::Involutions,
            Suite::Sequences,
            Suite::Table,
            Suite::Examples,
            Suite::Counterexample,
        ]
        .into_iter()
        .flat_map(|s| run_suite(s, random))
        .collect(),
        Suite::Involutions => involutions(random),
        Suite::Sequences => sequences(),
        Suite::Table => table(),
        Suite::Examples => examples(),
        Suite::Counterexample => counterexample(),
    }
}

pub fn render_report(checks: &[Check]) -> String {
    let mut out = String::new();
    for c in checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        out += &format!("{mark} [{}] {}: {}\n", c.suite, c.name, c.detail);
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    out += &format!("{passed}/{} checks passed\n", checks.len());
    out
}

fn rats(values: &[(i64, i64)]) -> Vec<Rational> {
    values.iter().map(|&(p, q)| rat(p, q)).collect()
}

fn oriented(group: FiniteGroup, signs: &[(&str, i8)]) -> Orientation {
    let group = Arc::new(group);
    if signs.is_empty() {
        Orientation::classical(group)
    } else {
        Orientation::from_generators(group, signs).expect("catalog orientation")
    }
}

fn random_orientations() -> Vec<Orientation> {
    vec![
        oriented(FiniteGroup::dihedral4(), &[("x", 1), ("y", -1)]),
        oriented(FiniteGroup::dihedral4(), &[("x", -1), ("y", 1)]),
        oriented(FiniteGroup::dihedral4(), &[("x", -1), ("y", -1)]),
        oriented(FiniteGroup::quaternion8(), &[("x", 1), ("y", -1)]),
        oriented(FiniteGroup::quaternion8(), &[("x", -1), ("y", -1)]),
        oriented(FiniteGroup::symmetric3(), &[("x", 1), ("y", -1)]),
        oriented(FiniteGroup::symmetric3(), &[]),
        oriented(FiniteGroup::cyclic(8).unwrap(), &[("x", -1)]),
        oriented(FiniteGroup::cyclic(6).unwrap(), &[("x", -1)]),
        oriented(FiniteGroup::cyclic(5).unwrap(), &[]),
    ]
}

fn involutions(random: RandomConfig) -> Vec<Check> {
    const SUITE: &str = "involutions";
    let mut rng = ChaCha8Rng::seed_from_u64(random.seed);
    let orientations = random_orientations();
    let pick = |i: usize| &orientations[i % orientations.len()];

    let mut axiom_failures = Vec::new();
    for i in 0..random.cases {
        let o = pick(i);
        let g = o.group();
        let a = random_element(g, &mut rng, 0.5);
        let b = random_element(g, &mut rng, 0.5);
        let c = random_rational(&mut rng, 7, 5);
        let star = |e: &AlgebraElement| e.involute_oriented(o).expect("same group");
        let ok = star(&(&a + &b)) == &star(&a) + &star(&b)
            && star(&a.scalar_mul(&c)) == star(&a).scalar_mul(&c)
            && star(&(&a * &b)) == &star(&b) * &star(&a)
            && star(&star(&a)) == a
            && star(&AlgebraElement::one(g)).is_one();
        if !ok {
            axiom_failures.push(format!("{a:?} / {b:?}"));
        }
    }

    let mut inverse_failures = Vec::new();
    let (mut tested, mut skipped) = (0, 0);
    let mut attempts = 0;
    while tested < random.cases && attempts < 20 * random.cases {
        let o = pick(attempts);
        attempts += 1;
        let beta = random_skew(o, &mut rng);
        let one = AlgebraElement::one(o.group());
        let (Some(plus), Some(minus)) = (oracle_inverse(&(&one + &beta)), oracle_inverse(&(&one - &beta)))
        else {
            skipped += 1;
            continue;
        };
        tested += 1;
        let u = &(&one - &beta) * &plus;
        let v = &(&one + &beta) * &minus;
        if !(&u * &v).is_one() || !(&v * &u).is_one() || !u.is_unitary(o).unwrap_or(false) {
            inverse_failures.push(format!("{beta:?}"));
        }
    }

    let mut rep_failures = Vec::new();
    for i in 0..random.cases {
        let g = pick(i).group();
        let a = random_element(g, &mut rng, 0.5);
        let b = random_element(g, &mut rng, 0.5);
        let lhs = regular_representation(&(&a * &b));
        let rhs = &regular_representation(&a) * &regular_representation(&b);
        if lhs != rhs {
            rep_failures.push(format!("{a:?} / {b:?}"));
        }
    }

    let summary = |failures: &[String], total: usize| match failures.first() {
        None => format!("{total} random cases"),
        Some(first) => format!("{} of {total} failed, first {first}", failures.len()),
    };
    vec![
        Check::new(
            SUITE,
            "oriented involution is an anti-automorphism of order 2",
            axiom_failures.is_empty(),
            summary(&axiom_failures, random.cases),
        ),
        Check::new(
            SUITE,
            "u[beta] * u[-beta] = 1 and u[beta] is unitary",
            inverse_failures.is_empty() && tested >= random.cases,
            format!("{}; {skipped} singular draws skipped", summary(&inverse_failures, tested)),
        ),
        Check::new(
            SUITE,
            "regular representation is multiplicative",
            rep_failures.is_empty(),
            summary(&rep_failures, random.cases),
        ),
    ]
}

/// `(1 + √3 i)^k + (1 - √3 i)^k` by expanding `(1 + √3 i)^k = A + B√3 i`.
fn companion_by_powers(k: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::one(), BigInt::zero());
    for _ in 0..k {
        // (a + b√3 i)(1 + √3 i) = (a - 3b) + (a + b)√3 i
        let next_a = &a - BigInt::from(3) * &b;
        b = &a + &b;
        a = next_a;
    }
    BigInt::from(2) * a
}

fn sequences() -> Vec<Check> {
    const SUITE: &str = "sequences";
    let mut checks = Vec::new();

    let fib_ok = (0..=30).all(|i| g_seq(&int(1), i) == Rational::from_integer(fibonacci(i).into()));
    checks.push(Check::new(SUITE, "G_i(q = 1) equals Fibonacci", fib_ok, "0 <= i <= 30"));

    let qs = [rat(1, 2), int(2), int(-3), int(7)];
    let closed_ok = qs
        .iter()
        .all(|q| (1..=25).all(|i| g_closed(q, i).is_ok_and(|v| v == g_seq(q, i))));
    checks.push(Check::new(
        SUITE,
        "binomial closed form of G_i matches the recurrence",
        closed_ok,
        "q in {1/2, 2, -3, 7}, 1 <= i <= 25",
    ));

    let companion_ok = (0..=60).all(|k| c_seq(k) == companion_by_powers(k));
    checks.push(Check::new(
        SUITE,
        "c_k matches (1 - sqrt(3) i)^k + (1 + sqrt(3) i)^k",
        companion_ok,
        "0 <= k <= 60",
    ));

    let period_ok = [(OrientedBranch::Two, 8), (OrientedBranch::Four, 10)]
        .into_iter()
        .all(|(branch, n)| {
            let table = a_coeffs_oriented(n).unwrap().unwrap();
            (2..=100).all(|k| a_closed_oriented(branch, k).is_ok_and(|v| v == table[k % 3]))
        });
    checks.push(Check::new(
        SUITE,
        "closed form of a_k has period 3",
        period_ok,
        "2 <= k <= 100 for n = 2 and n = 4 (mod 6)",
    ));

    let orders: Vec<usize> = (4..=60).step_by(2).filter(|n| n % 6 != 0).collect();
    let system_ok = orders.iter().all(|&n| {
        let a = a_coeffs_oriented(n).unwrap().unwrap();
        let g = Arc::new(FiniteGroup::cyclic(n).unwrap());
        let one_plus = AlgebraElement::from_terms(&g, [(0, int(1)), (1, int(1)), (n - 1, int(1))]);
        satisfies_oriented_system(&a) && (&one_plus * &AlgebraElement::on_powers(&g, 1, &a)).is_one()
    });
    let singular_ok = (6..=60)
        .step_by(6)
        .all(|n| matches!(a_coeffs_oriented(n), Ok(None)));
    checks.push(Check::new(
        SUITE,
        "oriented a-lists solve the cyclic system",
        system_ok && singular_ok,
        format!("{} invertible orders up to 60, multiples of 6 refused", orders.len()),
    ));

    let mut classical_ok = true;
    for n in 3..=16 {
        let g = Arc::new(FiniteGroup::cyclic(n).unwrap());
        for q in [int(1), int(-1), int(2), rat(1, 2), int(-3)] {
            let a = a_coeffs_classical(n, &q).unwrap();
            let one_plus = AlgebraElement::from_terms(&g, [(0, int(1)), (1, q.clone()), (n - 1, -q.clone())]);
            classical_ok &= oracle_inverse(&one_plus) == Some(AlgebraElement::on_powers(&g, 1, &a));
        }
    }
    checks.push(Check::new(
        SUITE,
        "classical a-lists invert 1 + q(x - x^-1)",
        classical_ok,
        "3 <= n <= 16, q in {1, -1, 2, 1/2, -3}, compared with elimination",
    ));
    checks
}

/// The rows of the published table. For orders 14 and 16 only the leading
/// terms and the last coefficient are printed; `None` marks the elision.
pub fn published_table() -> Vec<(usize, Vec<Rational>, Option<Rational>)> {
    let r = |v: &[(i64, i64)]| rats(v);
    vec![
        (4, r(&[(-1, 3), (2, 3), (-4, 3), (2, 3)]), None),
        (
            8,
            r(&[(-5, 3), (4, 3), (-2, 3), (-2, 3), (4, 3), (-2, 3), (-2, 3), (4, 3)]),
            None,
        ),
        (
            10,
            r(&[(-1, 3), (2, 3), (-4, 3), (2, 3), (2, 3), (-4, 3), (2, 3), (2, 3), (-4, 3), (2, 3)]),
            None,
        ),
        (
            14,
            r(&[(-5, 3), (4, 3), (-2, 3), (-2, 3), (4, 3), (-2, 3), (-2, 3), (4, 3)]),
            Some(rat(4, 3)),
        ),
        (
            16,
            r(&[(-1, 3), (2, 3), (-4, 3), (2, 3), (2, 3), (-4, 3), (2, 3), (2, 3), (-4, 3)]),
            Some(rat(2, 3)),
        ),
    ]
}

/// Whether `row` agrees with a published row, honouring the elision.
pub fn matches_published(row: &[Rational], shown: &[Rational], last: &Option<Rational>) -> bool {
    match last {
        None => row == shown,
        Some(l) => row.len() > shown.len() && row.starts_with(shown) && row.last() == Some(l),
    }
}

fn table() -> Vec<Check> {
    const SUITE: &str = "table";
    let published = published_table();
    let orders: Vec<usize> = published.iter().map(|p| p.0).collect();
    let rows = table_rows(&orders).expect("published orders are valid");
    let mut checks = Vec::new();
    let mut matched = 0;
    for ((n, shown, last), row) in published.iter().zip(&rows) {
        let coeffs = row.coefficients().unwrap_or_default();
        let g = Arc::new(FiniteGroup::cyclic(*n).unwrap());
        let o = Orientation::from_generators(g.clone(), &[("x", -1)]).unwrap();
        let beta = AlgebraElement::from_terms(&g, [(1, int(1)), (n - 1, int(1))]);
        let oracle = cayley_core::cayley::cayley_generic(&beta, &o)
            .unwrap()
            .map(|r| (0..*n).map(|k| r.unit.coeff(k)).collect::<Vec<_>>());
        let ok = matches_published(&coeffs, shown, last) && oracle.as_ref() == Some(&coeffs);
        matched += ok as usize;
        checks.push(Check::new(
            SUITE,
            format!("order {n} row"),
            ok,
            coeffs.iter().map(format_rational).collect::<Vec<_>>().join(" "),
        ));
    }
    checks.push(Check::new(
        SUITE,
        "published rows reproduced",
        matched == published.len(),
        format!("{matched}/{} rows match", published.len()),
    ));

    for n in [6, 12, 18] {
        let closed_refuses = table_rows(&[n]).is_ok_and(|r| r[0].unit.is_none());
        let g = Arc::new(FiniteGroup::cyclic(n).unwrap());
        let one_plus = AlgebraElement::from_terms(&g, [(0, int(1)), (1, int(1)), (n - 1, int(1))]);
        let oracle_singular = oracle_inverse(&one_plus).is_none();
        checks.push(Check::new(
            SUITE,
            format!("order {n} is not invertible"),
            closed_refuses && oracle_singular,
            format!("closed form refuses: {closed_refuses}, oracle singular: {oracle_singular}"),
        ));
    }
    checks
}

fn expect_unit(
    name: String,
    got: Result<Option<AlgebraElement>, cayley_core::Error>,
    expected: &AlgebraElement,
) -> Check {
    match got {
        Ok(Some(u)) => {
            let ok = &u == expected;
            let detail = if ok { u.to_string() } else { format!("got {u}, expected {expected}") };
            Check::new("examples", name, ok, detail)
        }
        Ok(None) => Check::new("examples", name, false, "reported not invertible"),
        Err(e) => Check::new("examples", name, false, e.to_string()),
    }
}

/// `(1 + t^2)/(1 - t^2) - 2t/(1 - t^2) w`.
fn l2_formula(group: &Arc<FiniteGroup>, w: usize, t: &Rational) -> AlgebraElement {
    let den = int(1) - t * t;
    AlgebraElement::from_terms(group, [(0, (int(1) + t * t) / &den), (w, int(-2) * t / &den)])
}

/// `(1 - 2qz + 4q^2 z^2 + 2qz^3) / (1 + 4q^2)` for `z` of order 4.
fn order_four_formula(group: &Arc<FiniteGroup>, z: usize, q: &Rational) -> AlgebraElement {
    let den = int(1) + int(4) * q * q;
    let coeffs = [int(1), int(-2) * q, int(4) * q * q, int(2) * q];
    AlgebraElement::on_powers(group, z, &coeffs.map(|c| c / &den))
}

fn z_plus_inverse_formula(group: &Arc<FiniteGroup>, z: usize) -> AlgebraElement {
    AlgebraElement::on_powers(group, z, &rats(&[(-1, 3), (2, 3), (-4, 3), (2, 3)]))
}

fn examples() -> Vec<Check> {
    const SUITE: &str = "examples";
    let mut checks = Vec::new();
    let q_grid = [int(1), int(2), rat(1, 2), int(-3), rat(-2, 5)];
    let t_grid = [int(2), rat(1, 2), int(-3), int(0)];
    let unit_of = |r: Result<Option<cayley_core::CayleyResult>, cayley_core::Error>| r.map(|o| o.map(|c| c.unit));

    // S3 with σ(x) = 1, σ(y) = -1
    let s3 = oriented(FiniteGroup::symmetric3(), &[("x", 1), ("y", -1)]);
    let g = s3.group().clone();
    let (x, y) = (g.generator("x").unwrap(), g.generator("y").unwrap());
    for q in &q_grid {
        let den = int(1) + int(3) * q * q;
        let expected = AlgebraElement::from_terms(
            &g,
            [
                (0, (int(1) - q * q) / &den),
                (x, int(2) * q * (q - int(1)) / &den),
                (g.pow(x, 2), int(2) * q * (q + int(1)) / &den),
            ],
        );
        checks.push(expect_unit(
            format!("S3 x:+1,y:-1 u[q(x - x^-1)] q={}", format_rational(q)),
            cayley_l1(x, q, &s3).map(|r| Some(r.unit)),
            &expected,
        ));
    }
    for t in &t_grid {
        checks.push(expect_unit(
            format!("S3 x:+1,y:-1 u[t*y] t={}", format_rational(t)),
            unit_of(cayley_l2(y, t, &s3)),
            &l2_formula(&g, y, t),
        ));
    }

    // order-4 L1 generators: C4 classical, and x in Q8 and D4 with σ(x) = 1
    let order_four = [
        oriented(FiniteGroup::cyclic(4).unwrap(), &[]),
        oriented(FiniteGroup::quaternion8(), &[("x", 1), ("y", -1)]),
        oriented(FiniteGroup::dihedral4(), &[("x", 1), ("y", -1)]),
    ];
    for o in &order_four {
        let g = o.group();
        let z = g.generator("x").unwrap();
        for q in &q_grid {
            checks.push(expect_unit(
                format!("{} [{}] u[q(x - x^-1)] q={}", g.label(), o.describe(), format_rational(q)),
                cayley_l1(z, q, o).map(|r| Some(r.unit)),
                &order_four_formula(g, z, q),
            ));
        }
    }

    // Q8: z + z^-1 under each orientation
    for signs in [[1, -1], [-1, 1], [-1, -1]] {
        let o = oriented(FiniteGroup::quaternion8(), &[("x", signs[0]), ("y", signs[1])]);
        let g = o.group();
        for name in ["x", "y", "x*y"] {
            let z = g.element_by_name(name).unwrap();
            if o.in_kernel(z) {
                continue;
            }
            checks.push(expect_unit(
                format!("Q8 [{}] u[z + z^-1] z={name}", o.describe()),
                unit_of(cayley_l3(z, &o)),
                &z_plus_inverse_formula(g, z),
            ));
        }
    }

    // D4 under each orientation
    let d4_cases: [([i8; 2], &[&str], &[&str]); 3] = [
        ([1, -1], &[], &["y", "x*y"]),
        ([-1, 1], &["x"], &["x*y", "x^3*y"]),
        ([-1, -1], &["x"], &["x^2*y", "y"]),
    ];
    for (signs, l3, l2) in d4_cases {
        let o = oriented(FiniteGroup::dihedral4(), &[("x", signs[0]), ("y", signs[1])]);
        let g = o.group();
        for name in l3 {
            let z = g.element_by_name(name).unwrap();
            checks.push(expect_unit(
                format!("D4 [{}] u[z + z^-1] z={name}", o.describe()),
                unit_of(cayley_l3(z, &o)),
                &z_plus_inverse_formula(g, z),
            ));
        }
        for name in l2 {
            let w = g.element_by_name(name).unwrap();
            for t in &t_grid {
                checks.push(expect_unit(
                    format!("D4 [{}] u[t*w] w={name} t={}", o.describe(), format_rational(t)),
                    unit_of(cayley_l2(w, t, &o)),
                    &l2_formula(g, w, t),
                ));
            }
        }
    }

    // odd order elements are Cayley units of an explicit skew element
    for n in [3, 5, 7, 9, 15] {
        let o = oriented(FiniteGroup::cyclic(n).unwrap(), &[]);
        let g = o.group();
        let got = odd_order_beta(g, 1).and_then(|beta| cayley_core::cayley::cayley_generic(&beta, &o));
        checks.push(expect_unit(
            format!("C{n} x is the Cayley unit of the odd-order beta"),
            got.map(|r| r.map(|c| c.unit)),
            &AlgebraElement::basis(g, 1),
        ));
    }
    for n in [2, 4, 6, 8] {
        let g = Arc::new(FiniteGroup::cyclic(n).unwrap());
        let singular = oracle_inverse(&AlgebraElement::from_terms(&g, [(0, int(1)), (1, int(1))])).is_none();
        checks.push(Check::new(SUITE, format!("C{n} 1 + x is singular"), singular, ""));
    }

    let cases = catalog_cases(&catalog_orientations(30), &default_q_grid());
    let outcomes = run(&cases, Exec::default());
    let failures: Vec<&str> = outcomes
        .iter()
        .filter(|o| !o.passed())
        .map(|o| o.label.as_str())
        .collect();
    checks.push(Check::new(
        SUITE,
        "closed forms agree with elimination over the catalog",
        failures.is_empty(),
        match failures.first() {
            None => format!("{} cases, all unitary", outcomes.len()),
            Some(first) => format!("{} of {} failed, first {first}", failures.len(), outcomes.len()),
        },
    ));
    checks
}

fn counterexample() -> Vec<Check> {
    const SUITE: &str = "counterexample";
    let grid = [int(0), int(1), int(-1), int(2), int(-2), rat(1, 2), rat(-1, 2), rat(3, 7)];
    let identity_ok = grid.iter().all(s3_factorization_identity);
    let s3 = oriented(FiniteGroup::symmetric3(), &[]);
    let g = s3.group();
    let (x, y) = (g.generator("x").unwrap(), g.generator("y").unwrap());
    let u = AlgebraElement::basis(g, y);
    let mut witnesses = Vec::new();
    for q in &grid {
        let k = AlgebraElement::from_terms(g, [(x, q.clone()), (g.inv(x), -q.clone())]);
        match is_product_two_cayley_witness(&u, &k, &s3) {
            Ok(false) => {}
            other => witnesses.push(format!("q={} gave {other:?}", format_rational(q))),
        }
    }
    let grid_text = "q in {0, 1, -1, 2, -2, 1/2, -1/2, 3/7}";
    vec![
        Check::new(
            SUITE,
            "(1 + y) - (1 - y)q(x - x^-1) = (1 - qx + qyx)(1 + y) in QS3",
            identity_ok,
            grid_text,
        ),
        Check::new(
            SUITE,
            "no q(x - x^-1) witnesses y as a product of two Cayley units",
            witnesses.is_empty(),
            witnesses.first().cloned().unwrap_or_else(|| grid_text.to_string()),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn companion_oracle_small_values() {
        let got: Vec<i64> = (0..6).map(|k| companion_by_powers(k).try_into().unwrap()).collect();
        assert_eq!(got, vec![2, 2, -4, -16, -16, 32]);
    }

    #[test]
    fn elision_matching() {
        let row = rats(&[(1, 1), (2, 1), (3, 1), (4, 1)]);
        assert!(matches_published(&row, &rats(&[(1, 1), (2, 1)]), &Some(int(4))));
        assert!(!matches_published(&row, &rats(&[(1, 1), (2, 1)]), &Some(int(3))));
        assert!(!matches_published(&row, &rats(&[(1, 1), (2, 1)]), &None));
    }
}
