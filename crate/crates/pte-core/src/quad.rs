//! Exact arithmetic in the real quadratic field Q(sqrt 6).
//!
//! A [`QuadElement`] is `a + b sqrt(6)` with rational `a`, `b`. Since 6 is
//! not a rational square the representation is unique, so equality of
//! elements is equality of the two coordinates. This is all the field
//! theory the Pell closed forms need: the conjugate flips the sign of `b`,
//! the norm is `a^2 - 6 b^2`, and an element is rational exactly when
//! `b = 0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The square root being adjoined: sqrt(6).
const D: i64 = 6;

/// An element `a + b sqrt(6)` of Q(sqrt 6).
#[derive(Clone, PartialEq, Eq)]
pub struct QuadElement {
    a: BigRational,
    b: BigRational,
}

impl QuadElement {
    /// Builds `a + b sqrt(6)`.
    #[must_use]
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadElement { a, b }
    }

    /// Embeds a machine integer.
    #[must_use]
    pub fn from_int(v: i64) -> Self {
        QuadElement::new(
            BigRational::from_integer(BigInt::from(v)),
            BigRational::zero(),
        )
    }

    /// Embeds a rational `n / d` given as machine integers (`d != 0`).
    #[must_use]
    pub fn from_ratio(n: i64, d: i64) -> Self {
        QuadElement::new(
            BigRational::new(BigInt::from(n), BigInt::from(d)),
            BigRational::zero(),
        )
    }

    /// `c sqrt(6)` for a machine integer `c`.
    #[must_use]
    pub fn surd(c: i64) -> Self {
        QuadElement::new(
            BigRational::zero(),
            BigRational::from_integer(BigInt::from(c)),
        )
    }

    #[must_use]
    pub fn zero() -> Self {
        QuadElement::new(BigRational::zero(), BigRational::zero())
    }

    #[must_use]
    pub fn one() -> Self {
        QuadElement::new(BigRational::one(), BigRational::zero())
    }

    /// The rational coordinate.
    #[must_use]
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    /// The coefficient of sqrt(6).
    #[must_use]
    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Is the element rational, i.e. is the surd coordinate zero?
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The value as a rational, when it is one.
    #[must_use]
    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.a.clone())
    }

    /// The value as an integer, when it is one.
    #[must_use]
    pub fn to_integer(&self) -> Option<BigInt> {
        match self.to_rational() {
            Some(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    /// The field conjugate `a - b sqrt(6)`.
    #[must_use]
    pub fn conjugate(&self) -> Self {
        QuadElement::new(self.a.clone(), -self.b.clone())
    }

    /// The field norm `a^2 - 6 b^2`, a rational.
    #[must_use]
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(BigInt::from(D)) * &self.b * &self.b
    }

    /// The multiplicative inverse, `None` for zero. Since 6 is not a
    /// rational square the norm vanishes only at zero.
    #[must_use]
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(QuadElement::new(&self.a / &n, -&self.b / &n))
    }

    /// Raises to a nonnegative power by repeated squaring.
    #[must_use]
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QuadElement::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Add for &QuadElement {
    type Output = QuadElement;
    fn add(self, rhs: &QuadElement) -> QuadElement {
        QuadElement::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &QuadElement {
    type Output = QuadElement;
    fn sub(self, rhs: &QuadElement) -> QuadElement {
        QuadElement::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Neg for &QuadElement {
    type Output = QuadElement;
    fn neg(self) -> QuadElement {
        QuadElement::new(-self.a.clone(), -self.b.clone())
    }
}

impl Mul for &QuadElement {
    type Output = QuadElement;
    fn mul(self, rhs: &QuadElement) -> QuadElement {
        let d = BigRational::from_integer(BigInt::from(D));
        QuadElement::new(
            &self.a * &rhs.a + &d * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl fmt::Debug for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadElement({self})")
    }
}

impl fmt::Display for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({D})", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qe(a: i64, b: i64) -> QuadElement {
        QuadElement::new(
            BigRational::from_integer(BigInt::from(a)),
            BigRational::from_integer(BigInt::from(b)),
        )
    }

    #[test]
    fn multiplication_and_conjugates() {
        let alpha = qe(5, 2); // 5 + 2 sqrt(6)
        let beta = alpha.conjugate(); // 5 - 2 sqrt(6)
        assert_eq!(&alpha * &beta, QuadElement::one());
        assert_eq!(alpha.norm(), BigRational::one());
        // (5 + 2 sqrt6)^2 = 49 + 20 sqrt6
        assert_eq!(alpha.pow(2), qe(49, 20));
        assert_eq!(&alpha * &alpha, qe(49, 20));
        assert_eq!(alpha.pow(0), QuadElement::one());
        assert_eq!(alpha.pow(1), alpha);
    }

    #[test]
    fn inverse_of_four_sqrt6() {
        let four_sqrt6 = QuadElement::surd(4);
        let inv = four_sqrt6.inverse().unwrap();
        // 1/(4 sqrt6) = sqrt6 / 24
        assert_eq!(
            inv,
            QuadElement::new(
                BigRational::zero(),
                BigRational::new(BigInt::from(1), BigInt::from(24))
            )
        );
        assert_eq!(&four_sqrt6 * &inv, QuadElement::one());
        assert_eq!(QuadElement::zero().inverse(), None);
    }

    #[test]
    fn rational_detection() {
        let alpha = qe(5, 2);
        let sum = &alpha + &alpha.conjugate();
        assert!(sum.is_rational());
        assert_eq!(sum.to_integer(), Some(BigInt::from(10)));
        assert_eq!(alpha.to_rational(), None);
        let half = QuadElement::from_ratio(1, 2);
        assert_eq!(half.to_integer(), None);
        assert!(half.to_rational().is_some());
    }

    #[test]
    fn arithmetic_identities() {
        let x = qe(3, -7);
        let y = qe(-2, 5);
        assert_eq!(&(&x + &y) - &y, x);
        assert_eq!(&x + &(-&x), QuadElement::zero());
        let prod_norm = (&x * &y).norm();
        assert_eq!(prod_norm, x.norm() * y.norm());
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, QuadElement::one());
    }
}
