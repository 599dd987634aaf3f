//! Bivariate resultants by fraction-free elimination.
//!
//! [`resultant_y`] eliminates `y` between a univariate integer polynomial
//! `f(y)` and a bivariate polynomial `g(x, y)` given as a vector of
//! `x`-polynomials indexed by the power of `y`. The Sylvester matrix has
//! entries in Z[x]; its determinant is computed with the Bareiss scheme,
//! whose interior divisions are exact in any integral domain, so no rational
//! arithmetic is ever needed. All instances in this crate are tiny (at most
//! 6 x 6), so asymptotics are irrelevant and clarity wins.

use std::fmt;

use crate::poly::Polynomial;

/// Errors from resultant computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResultantError {
    /// `f` is the zero polynomial.
    ZeroF,
    /// Every `y`-coefficient of `g` is zero.
    ZeroG,
}

impl fmt::Display for ResultantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResultantError::ZeroF => write!(f, "resultant of the zero polynomial"),
            ResultantError::ZeroG => write!(f, "resultant with identically zero g(x, y)"),
        }
    }
}

impl std::error::Error for ResultantError {}

/// Resultant of `f(y)` and `g(x, y)` with respect to `y`.
///
/// `g[i]` is the `x`-polynomial coefficient of `y^i`; trailing zero entries
/// are ignored. For constant `f` of value `c` the result is `c^deg_y(g)`,
/// and for `g` constant in `y` it is `g0(x)^deg(f)`; when both are constant
/// the resultant is 1 (the determinant of the empty matrix).
pub fn resultant_y(f: &Polynomial, g: &[Polynomial]) -> Result<Polynomial, ResultantError> {
    let n = f.degree().ok_or(ResultantError::ZeroF)?;
    let m = g
        .iter()
        .rposition(|c| !c.is_zero())
        .ok_or(ResultantError::ZeroG)?;
    if n == 0 && m == 0 {
        return Ok(Polynomial::one());
    }
    if n == 0 {
        return Ok(Polynomial::constant(f.constant_term()).pow(m));
    }
    if m == 0 {
        return Ok(g[0].pow(n));
    }
    let size = n + m;
    let mut matrix = vec![vec![Polynomial::zero(); size]; size];
    for (i, row) in matrix.iter_mut().take(m).enumerate() {
        for j in 0..=n {
            row[i + j] = Polynomial::constant(f.coeff(n - j));
        }
    }
    for (i, row) in matrix.iter_mut().skip(m).take(n).enumerate() {
        for j in 0..=m {
            row[i + j] = g[m - j].clone();
        }
    }
    Ok(determinant(matrix))
}

/// Fraction-free Bareiss determinant over Z[x].
fn determinant(mut m: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one();
    }
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Polynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Polynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m.pop().expect("nonempty").pop().expect("nonempty");
    if negate {
        -&det
    } else {
        det
    }
}
