//! Dense univariate polynomials with exact coefficients.
//!
//! [`Polynomial`] is the workhorse: coefficients are [`BigInt`], stored in
//! ascending order of degree with no trailing zeros, so the zero polynomial
//! is the empty vector and representations are canonical. [`RatPoly`] is the
//! rational-coefficient companion used where division is unavoidable.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial over the integers, dense, ascending, canonical.
///
/// `coeffs[i]` is the coefficient of `x^i`. The vector carries no trailing
/// zeros, and the zero polynomial is the empty vector, so two polynomials are
/// equal as functions exactly when their representations are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    #[must_use]
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Convenience constructor from machine integers, ascending.
    #[must_use]
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The zero polynomial.
    #[must_use]
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    #[must_use]
    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    /// A constant polynomial.
    #[must_use]
    pub fn constant(c: BigInt) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `c * x^n`.
    #[must_use]
    pub fn monomial(c: BigInt, n: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = c;
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Is this the constant polynomial 1?
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    #[must_use]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice (empty for zero).
    #[must_use]
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The coefficient of `x^i`, zero beyond the degree.
    #[must_use]
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Leading coefficient, zero for the zero polynomial.
    #[must_use]
    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// The constant term.
    #[must_use]
    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Evaluates at an integer point by Horner's rule.
    #[must_use]
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Multiplies by the scalar `c`.
    #[must_use]
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^n`.
    #[must_use]
    pub fn mul_xpow(&self, n: usize) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { coeffs }
    }

    /// Divides by `x^n` if every coefficient below `x^n` vanishes.
    #[must_use]
    pub fn div_xpow(&self, n: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        if self.coeffs.len() < n || self.coeffs[..n].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Polynomial {
            coeffs: self.coeffs[n..].to_vec(),
        })
    }

    /// Truncates to terms of degree strictly below `n`.
    #[must_use]
    pub fn truncate(&self, n: usize) -> Self {
        Polynomial::new(self.coeffs.iter().take(n).cloned().collect())
    }

    /// The content: gcd of all coefficients, nonnegative, zero only for zero.
    #[must_use]
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// The primitive part `self / content`, with the sign left untouched.
    /// The zero polynomial is its own primitive part.
    #[must_use]
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Exact division in Z[x]: returns `self / rhs` when the division leaves
    /// no remainder and the quotient has integer coefficients, else `None`.
    #[must_use]
    pub fn exact_div(&self, rhs: &Polynomial) -> Option<Polynomial> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let dn = self.degree()?;
        let dd = rhs.degree()?;
        if dn < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); dn - dd + 1];
        let lead = rhs.leading_coeff();
        for i in (0..=dn - dd).rev() {
            let (q, r) = rem[i + dd].div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (j, b) in rhs.coeffs.iter().enumerate() {
                    let t = &q * b;
                    rem[i + j] -= t;
                }
            }
            quo[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Polynomial::new(quo))
    }

    /// Pseudo-remainder: `lead(rhs)^(da-db+1) * self` reduced modulo `rhs`.
    /// Requires `rhs` nonzero and `deg self >= deg rhs`.
    fn pseudo_rem(&self, rhs: &Polynomial) -> Polynomial {
        let da = self.degree().expect("pseudo_rem of zero dividend");
        let db = rhs.degree().expect("pseudo_rem by zero divisor");
        debug_assert!(da >= db);
        let lead = rhs.leading_coeff();
        let mut rem = self.coeffs.clone();
        for i in (0..=da - db).rev() {
            let top = rem[i + db].clone();
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[i + j] -= &top * b;
            }
            debug_assert!(rem[i + db].is_zero());
        }
        Polynomial::new(rem[..db].to_vec())
    }

    /// Greatest common divisor in Z[x] via the primitive Euclidean scheme.
    ///
    /// The result is primitive (content 1) with a positive leading
    /// coefficient; `gcd(p, 0)` is the normalized `p`, and `gcd(0, 0) = 0`.
    #[must_use]
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        if a.is_zero() {
            return b.normalized_primitive();
        }
        if b.is_zero() {
            return a.normalized_primitive();
        }
        let mut f = a.primitive_part();
        let mut g = b.primitive_part();
        if f.degree() < g.degree() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            let r = f.pseudo_rem(&g).primitive_part();
            f = g;
            g = r;
        }
        f.normalized_primitive()
    }

    /// Primitive part with positive leading coefficient.
    fn normalized_primitive(&self) -> Polynomial {
        let p = self.primitive_part();
        if p.leading_coeff().is_negative() {
            -&p
        } else {
            p
        }
    }

    /// Raises to a nonnegative integer power.
    #[must_use]
    pub fn pow(&self, e: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Lifts to rational coefficients.
    #[must_use]
    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial { coeffs }
    }
}

/// A polynomial with rational coefficients, same canonical layout as
/// [`Polynomial`]. Only the operations needed around division live here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    /// Builds from ascending coefficients, trimming trailing zeros.
    #[must_use]
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    #[must_use]
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    #[must_use]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    #[must_use]
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    #[must_use]
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Quotient and remainder with `deg rem < deg rhs`. `None` when `rhs` is zero.
    #[must_use]
    pub fn divmod(&self, rhs: &RatPoly) -> Option<(RatPoly, RatPoly)> {
        let dd = rhs.degree()?;
        if self.is_zero() {
            return Some((RatPoly::zero(), RatPoly::zero()));
        }
        let dn = self.degree().expect("nonzero checked above");
        if dn < dd {
            return Some((RatPoly::zero(), self.clone()));
        }
        let lead = rhs.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigRational::zero(); dn - dd + 1];
        for i in (0..=dn - dd).rev() {
            let q = &rem[i + dd] / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = &q * b;
                rem[i + j] -= t;
            }
            quo[i] = q;
        }
        Some((RatPoly::new(quo), RatPoly::new(rem[..dd].to_vec())))
    }

    /// Drops to integer coefficients when every coefficient is an integer.
    #[must_use]
    pub fn to_int(&self) -> Option<Polynomial> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            coeffs.push(c.to_integer());
        }
        Some(Polynomial::new(coeffs))
    }
}
