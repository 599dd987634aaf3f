//! The Pell-type sequence `h(0) = 0, h(1) = 1, h(k) = 10 h(k-1) - h(k-2)`
//! and its closed forms over Q(sqrt 6).
//!
//! The sequence drives the Chernick substitution `(m, n) = (h(k+1), h(k))`:
//! the norm-form invariant `h(k+1)^2 - 10 h(k+1) h(k) + h(k)^2 = 1` is what
//! pins the twelfth Chernick form to the constant 1. The closed forms are
//! kept as independent cross-checks of the recurrence, not as the engine.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::quad::QuadElement;

/// Infinite iterator over `h(0), h(1), h(2), ...` with O(1) state.
pub fn h_iter() -> impl Iterator<Item = BigInt> {
    let mut cur = BigInt::zero();
    let mut next = BigInt::one();
    std::iter::from_fn(move || {
        let out = cur.clone();
        let step = 10 * &next - &cur;
        cur = std::mem::replace(&mut next, step);
        Some(out)
    })
}

/// `h(k)` by iteration.
#[must_use]
pub fn h(k: usize) -> BigInt {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    for _ in 0..k {
        let next = 10 * &b - &a;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// The norm-form value `h(k+1)^2 - 10 h(k+1) h(k) + h(k)^2`; equals 1 for
/// every `k` by induction down to `h(1)^2 - 10 h(1) h(0) + h(0)^2 = 1`.
#[must_use]
pub fn pell_invariant(k: usize) -> BigInt {
    let hk = h(k);
    let hk1 = h(k + 1);
    &hk1 * &hk1 - 10 * &hk1 * &hk + &hk * &hk
}

/// `alpha = 5 + 2 sqrt(6)`, the fundamental growth unit.
fn alpha() -> QuadElement {
    QuadElement::new(
        BigRational::from_integer(BigInt::from(5)),
        BigRational::from_integer(BigInt::from(2)),
    )
}

/// `alpha^2 = 49 + 20 sqrt(6)`.
fn alpha_squared() -> QuadElement {
    QuadElement::new(
        BigRational::from_integer(BigInt::from(49)),
        BigRational::from_integer(BigInt::from(20)),
    )
}

/// Extracts an integer from a closed form; non-integrality means the
/// formula was implemented wrongly, so it panics rather than erring.
fn expect_integer(value: QuadElement, what: &str) -> BigInt {
    value
        .to_integer()
        .unwrap_or_else(|| panic!("closed form for {what} is not an integer: {value}"))
}

/// Closed form `h(k) = (5+2 sqrt6)^k / (4 sqrt6) - (5-2 sqrt6)^k / (4 sqrt6)`.
#[must_use]
pub fn closed_form_h(k: u32) -> BigInt {
    let a = alpha();
    let inv = QuadElement::surd(4).inverse().expect("4 sqrt6 is nonzero");
    let value = &(&a.pow(k) - &a.conjugate().pow(k)) * &inv;
    expect_integer(value, "h")
}

/// Closed form `h(k)^2 = (-2 + (49-20 sqrt6)^k + (49+20 sqrt6)^k) / 96`.
#[must_use]
pub fn closed_form_h_squared(k: u32) -> BigInt {
    let a2 = alpha_squared();
    let sum = &(&a2.pow(k) + &a2.conjugate().pow(k)) + &QuadElement::from_int(-2);
    let value = &sum * &QuadElement::from_ratio(1, 96);
    expect_integer(value, "h^2")
}

/// Closed form
/// `h(k+1) h(k) = (-10 + (5-2 sqrt6)(49-20 sqrt6)^k + (5+2 sqrt6)(49+20 sqrt6)^k) / 96`.
#[must_use]
pub fn closed_form_h_product(k: u32) -> BigInt {
    let a = alpha();
    let a2 = alpha_squared();
    let plus = &a * &a2.pow(k);
    let minus = &a.conjugate() * &a2.conjugate().pow(k);
    let sum = &(&plus + &minus) + &QuadElement::from_int(-10);
    let value = &sum * &QuadElement::from_ratio(1, 96);
    expect_integer(value, "h(k+1) h(k)")
}

/// Which closed form a deviation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormKind {
    H,
    HSquared,
    HProduct,
}

impl std::fmt::Display for ClosedFormKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClosedFormKind::H => write!(f, "h"),
            ClosedFormKind::HSquared => write!(f, "h^2"),
            ClosedFormKind::HProduct => write!(f, "h(k+1)h(k)"),
        }
    }
}

/// A mismatch between recurrence and closed-form values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormDeviation {
    pub k: usize,
    pub kind: ClosedFormKind,
    pub recurrence: BigInt,
    pub closed_form: BigInt,
}

/// Compares recurrence values against all three closed forms for
/// `k = 0..=max_k`; returns every mismatch (none, if the formulas hold).
#[must_use]
pub fn verify_closed_forms(max_k: usize) -> Vec<ClosedFormDeviation> {
    let mut deviations = Vec::new();
    let mut iter = h_iter();
    let mut cur = iter.next().expect("infinite");
    for k in 0..=max_k {
        let next = iter.next().expect("infinite");
        let checks = [
            (ClosedFormKind::H, cur.clone(), closed_form_h(k as u32)),
            (
                ClosedFormKind::HSquared,
                &cur * &cur,
                closed_form_h_squared(k as u32),
            ),
            (
                ClosedFormKind::HProduct,
                &next * &cur,
                closed_form_h_product(k as u32),
            ),
        ];
        for (kind, recurrence, closed_form) in checks {
            if recurrence != closed_form {
                deviations.push(ClosedFormDeviation {
                    k,
                    kind,
                    recurrence,
                    closed_form,
                });
            }
        }
        cur = next;
    }
    deviations
}

/// A `k` at which the Pell invariant failed to be 1 (never happens; kept
/// so the verifier reports rather than asserts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantDeviation {
    pub k: usize,
    pub value: BigInt,
}

/// Checks `h(k+1)^2 - 10 h(k+1) h(k) + h(k)^2 = 1` for `k = 0..=max_k`
/// with a single streaming pass.
#[must_use]
pub fn verify_pell_invariant(max_k: usize) -> Vec<InvariantDeviation> {
    let mut deviations = Vec::new();
    let mut iter = h_iter();
    let mut cur = iter.next().expect("infinite");
    for k in 0..=max_k {
        let next = iter.next().expect("infinite");
        let value: BigInt = &next * &next - BigInt::from(10) * &next * &cur + &cur * &cur;
        if !value.is_one() {
            deviations.push(InvariantDeviation { k, value });
        }
        cur = next;
    }
    deviations
}
