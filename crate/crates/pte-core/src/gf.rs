//! Rational generating functions in canonical reduced form.
//!
//! A [`RationalGF`] represents the formal power series `num(x) / den(x)` with
//! integer polynomial numerator and denominator. Construction normalizes:
//! the fraction is reduced by the polynomial gcd, the remaining joint integer
//! content is divided out, and signs are flipped so the denominator has a
//! positive constant term. Two equal series therefore compare equal as
//! structs, which the rest of the crate leans on for exact identity checks.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Polynomial;

/// Errors from constructing or combining generating functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GfError {
    /// The denominator is the zero polynomial.
    ZeroDenominator,
    /// The reduced denominator vanishes at the origin, so the fraction has
    /// no power-series expansion.
    NoExpansionAtZero,
}

impl fmt::Display for GfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfError::ZeroDenominator => write!(f, "denominator is the zero polynomial"),
            GfError::NoExpansionAtZero => {
                write!(f, "denominator vanishes at x = 0 even after reduction")
            }
        }
    }
}

impl std::error::Error for GfError {}

/// A reduced rational generating function `num / den` over Z[x].
///
/// Invariants established by [`RationalGF::new`]:
/// * `den` is nonzero with `den(0) > 0`;
/// * `gcd(num, den)` is constant and the joint content of all coefficients is 1;
/// * the zero series is exactly `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalGF {
    num: Polynomial,
    den: Polynomial,
}

impl RationalGF {
    /// Builds and normalizes `num / den`.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, GfError> {
        if den.is_zero() {
            return Err(GfError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalGF {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            });
        }
        let g = Polynomial::gcd(&num, &den);
        let mut num = num.exact_div(&g).expect("gcd divides numerator");
        let mut den = den.exact_div(&g).expect("gcd divides denominator");
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num
                .exact_div(&Polynomial::constant(c.clone()))
                .expect("content divides");
            den = den
                .exact_div(&Polynomial::constant(c))
                .expect("content divides");
        }
        if den.constant_term().is_zero() {
            return Err(GfError::NoExpansionAtZero);
        }
        if den.constant_term().is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RationalGF { num, den })
    }

    /// The series that is identically zero.
    #[must_use]
    pub fn zero() -> Self {
        RationalGF {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    /// A polynomial viewed as a (terminating) series.
    #[must_use]
    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalGF {
            num: p,
            den: Polynomial::one(),
        }
    }

    #[must_use]
    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    #[must_use]
    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Is the denominator constant, i.e. is the series a polynomial?
    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Sum of two series.
    pub fn add(&self, rhs: &RationalGF) -> Result<RationalGF, GfError> {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalGF::new(num, &self.den * &rhs.den)
    }

    /// Product of two series.
    pub fn mul(&self, rhs: &RationalGF) -> Result<RationalGF, GfError> {
        RationalGF::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    /// Integer scalar multiple.
    pub fn scale(&self, c: &num_bigint::BigInt) -> RationalGF {
        RationalGF::new(self.num.scale(c), self.den.clone())
            .expect("scaling keeps the denominator usable")
    }

    /// The linear combination `alpha * self + beta * rhs`.
    pub fn linear_combination(
        &self,
        alpha: &num_bigint::BigInt,
        rhs: &RationalGF,
        beta: &num_bigint::BigInt,
    ) -> Result<RationalGF, GfError> {
        self.scale(alpha).add(&rhs.scale(beta))
    }
}

impl fmt::Debug for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalGF({})", self)
    }
}
