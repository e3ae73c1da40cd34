//! Integer and rational sequences behind the closed-form inverses.
//!
//! Everything here is computed iteratively with arbitrary-precision values;
//! the complex-root closed forms of the oriented case are evaluated through
//! the integer companion sequence [`c_seq`], so no irrational arithmetic is
//! ever needed.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::rational::{int, pow, rat, Rational};

/// `G_0..G_{len-1}` for `G_0 = 0`, `G_1 = 1`, `G_i = q²G_{i-2} + G_{i-1}`.
pub fn g_prefix(q: &Rational, len: usize) -> Vec<Rational> {
    let q2 = q * q;
    let mut out: Vec<Rational> = Vec::with_capacity(len);
    for i in 0..len {
        let next = match i {
            0 => Rational::zero(),
            1 => Rational::one(),
            _ => &q2 * &out[i - 2] + &out[i - 1],
        };
        out.push(next);
    }
    out
}

/// The Fibonacci-like `G_i` by its recurrence.
pub fn g_seq(q: &Rational, i: usize) -> Rational {
    g_prefix(q, i + 1).pop().unwrap()
}

/// `G_i = 2^{1-i} Σ_{m odd ≤ i} C(i, m) (1 + 4q²)^{(m-1)/2}` for `i >= 1`.
pub fn g_closed(q: &Rational, i: usize) -> Result<Rational> {
    if i == 0 {
        return Err(invalid("the binomial closed form needs i >= 1"));
    }
    let disc = int(1) + int(4) * q * q;
    let big_i = BigInt::from(i);
    let sum = (1..=i).step_by(2).fold(Rational::zero(), |acc, m| {
        let c = Rational::from_integer(binomial(big_i.clone(), BigInt::from(m)));
        acc + c * pow(&disc, (m - 1) / 2)
    });
    Ok(sum / Rational::from_integer(BigInt::one() << (i - 1)))
}

pub fn fibonacci(i: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..i {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Denominator `G_{n+1} + q²G_{n-1} - qⁿ(1 + (-1)ⁿ)` shared by the classical
/// inverse and unit coefficients.
fn classical_denominator(g: &[Rational], n: usize, q: &Rational) -> Rational {
    let parity = if n.is_multiple_of(2) { int(2) } else { int(0) };
    &g[n + 1] + q * q * &g[n - 1] - pow(q, n) * parity
}

fn check_classical(n: usize, q: &Rational) -> Result<()> {
    if n <= 2 {
        return Err(invalid(format!("element order must exceed 2, got {n}")));
    }
    if q.is_zero() {
        return Err(invalid("q must be non-zero (the inverse of 1 is 1)"));
    }
    Ok(())
}

/// Coefficients `a_0..a_{n-1}` of `(1 + q(x - x^-1))^-1` on the powers of an
/// element `x` of order `n > 2`.
pub fn a_coeffs_classical(n: usize, q: &Rational) -> Result<Vec<Rational>> {
    check_classical(n, q)?;
    let g = g_prefix(q, n + 2);
    let den = classical_denominator(&g, n, q);
    assert!(
        !den.is_zero(),
        "1 + q(x - x^-1) must be invertible over Q (n = {n}, q = {q})"
    );
    let neg_q = -q;
    Ok((0..n)
        .map(|i| (pow(q, n - i) * &g[i] + pow(&neg_q, i) * &g[n - i]) / &den)
        .collect())
}

/// The `q = 1` specialisation written with Fibonacci numbers.
pub fn a_coeffs_fibonacci(n: usize) -> Result<Vec<Rational>> {
    if n <= 2 {
        return Err(invalid(format!("element order must exceed 2, got {n}")));
    }
    let f = |i: usize| Rational::from_integer(BigInt::from(fibonacci(i)));
    let parity = if n.is_multiple_of(2) { int(2) } else { int(0) };
    let den = f(n + 1) + f(n - 1) - parity;
    Ok((0..n)
        .map(|i| {
            let tail = if i % 2 == 0 { f(n - i) } else { -f(n - i) };
            (f(i) + tail) / &den
        })
        .collect())
}

/// Unit coefficients `b` from the inverse coefficients `a` (classical case):
/// `b_0` by its own closed form, `b_i = 2a_i` otherwise.
pub fn b_from_a_classical(a: &[Rational], n: usize, q: &Rational) -> Result<Vec<Rational>> {
    check_classical(n, q)?;
    if a.len() != n {
        return Err(invalid(format!("expected {n} coefficients, got {}", a.len())));
    }
    let g = g_prefix(q, n + 2);
    let den = classical_denominator(&g, n, q);
    let parity = if n.is_multiple_of(2) { int(2) } else { int(0) };
    let b0 = (&g[n] - int(2) * q * q * &g[n - 1] + pow(q, n) * parity) / den;
    Ok(std::iter::once(b0)
        .chain(a[1..].iter().map(|v| v * int(2)))
        .collect())
}

/// Residue class of an invertible even order modulo 6.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrientedBranch {
    /// `n ≡ 2 (mod 6)`
    Two,
    /// `n ≡ 4 (mod 6)`
    Four,
}

impl OrientedBranch {
    pub fn of(n: usize) -> Option<Self> {
        match n % 6 {
            2 => Some(OrientedBranch::Two),
            4 => Some(OrientedBranch::Four),
            _ => None,
        }
    }
}

/// Coefficients of `(1 + x + x^-1)^-1` for `x` of even order `n >= 4` with
/// negative sign. `Ok(None)` when `n ≡ 0 (mod 6)`, where the element is a
/// zero divisor.
pub fn a_coeffs_oriented(n: usize) -> Result<Option<Vec<Rational>>> {
    if n % 2 == 1 || n < 4 {
        return Err(invalid(format!(
            "order must be even and at least 4, got {n}"
        )));
    }
    let table = match OrientedBranch::of(n) {
        None => return Ok(None),
        Some(OrientedBranch::Two) => [rat(-1, 3), rat(2, 3), rat(-1, 3)],
        Some(OrientedBranch::Four) => [rat(1, 3), rat(1, 3), rat(-2, 3)],
    };
    Ok(Some((0..n).map(|k| table[k % 3].clone()).collect()))
}

/// `c_k = (1 - √3 i)^k + (1 + √3 i)^k`, via `c_k = 2c_{k-1} - 4c_{k-2}`.
pub fn c_seq(k: usize) -> BigInt {
    let (mut prev, mut cur) = (BigInt::from(2), BigInt::from(2));
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = BigInt::from(2) * &cur - BigInt::from(4) * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Closed form of `a_k` (`k >= 2`) in the oriented case.
pub fn a_closed_oriented(branch: OrientedBranch, k: usize) -> Result<Rational> {
    if k < 2 {
        return Err(invalid("the closed form covers k >= 2"));
    }
    let (sign_exp, idx) = match branch {
        OrientedBranch::Two => (k - 1, k - 1),
        OrientedBranch::Four => (k, k + 1),
    };
    let sign = if sign_exp % 2 == 0 { 1 } else { -1 };
    let num = BigInt::from(sign) * c_seq(idx);
    let den = BigInt::from(3) << idx;
    Ok(Rational::new(num, den))
}

/// `b_0 = 2a_0 - 1`, `b_k = 2a_k`.
pub fn b_from_a_oriented(a: &[Rational]) -> Vec<Rational> {
    a.iter()
        .enumerate()
        .map(|(k, v)| if k == 0 { v * int(2) - int(1) } else { v * int(2) })
        .collect()
}

/// Whether `a` solves the cyclic system `a_{n-1} + a_0 + a_1 = 1` and
/// `a_{k-2} + a_{k-1} + a_k = 0` for `2 <= k <= n` (indices mod `n`).
pub fn satisfies_oriented_system(a: &[Rational]) -> bool {
    let n = a.len();
    if n < 3 {
        return false;
    }
    let at = |k: usize| &a[k % n];
    let first = at(n - 1) + at(0) + at(1);
    first.is_one() && (2..=n).all(|k| (at(k - 2) + at(k - 1) + at(k)).is_zero())
}
