//! C-finite sequences: linear recurrences with constant coefficients.
//!
//! A [`CFiniteSeq`] of order `d` stores rational recurrence coefficients
//! `rec[0..d]` and integer initial terms `init[0..d]`, with
//! `s(n) = rec[0] s(n-1) + ... + rec[d-1] s(n-d)` for `n >= d`. The module
//! converts between this view and the generating-function view in both
//! directions, expands series, combines sequences linearly, shifts them,
//! multiplies them termwise (Hadamard product, via a resultant), and guesses
//! a minimal recurrence from a prefix of terms.
//!
//! Integer-valued streams are the default: expansion into integers checks
//! every division exactly and reports the first failing index instead of
//! rounding. Coefficient streams are pull-based iterators with O(order)
//! state, so long verifications never hold a whole series in memory.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::gf::{GfError, RationalGF};
use crate::poly::Polynomial;
use crate::resultant::resultant_y;

/// Errors from sequence construction and manipulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CFiniteError {
    /// A recurrence must have order at least 1.
    EmptyRecurrence,
    /// `rec` and `init` must have the same length.
    LengthMismatch { rec: usize, init: usize },
    /// A series coefficient failed to be an integer at this index.
    NonIntegralSeries { index: usize },
    /// Recurrence guessing needs at least `2 * max_order + 2` terms.
    InsufficientData { needed: usize, got: usize },
    /// An underlying generating-function operation failed.
    Gf(GfError),
}

impl fmt::Display for CFiniteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CFiniteError::EmptyRecurrence => write!(f, "recurrence order must be at least 1"),
            CFiniteError::LengthMismatch { rec, init } => write!(
                f,
                "recurrence has {rec} coefficients but {init} initial terms"
            ),
            CFiniteError::NonIntegralSeries { index } => {
                write!(f, "series coefficient at index {index} is not an integer")
            }
            CFiniteError::InsufficientData { needed, got } => write!(
                f,
                "recurrence guessing needs at least {needed} terms, got {got}"
            ),
            CFiniteError::Gf(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CFiniteError {}

impl From<GfError> for CFiniteError {
    fn from(e: GfError) -> Self {
        CFiniteError::Gf(e)
    }
}

/// A sequence satisfying a linear recurrence with constant coefficients.
#[derive(Clone)]
pub struct CFiniteSeq {
    rec: Vec<BigRational>,
    init: Vec<BigInt>,
    gf: Option<RationalGF>,
}

impl CFiniteSeq {
    /// Builds a sequence from recurrence coefficients and initial terms.
    pub fn new(rec: Vec<BigRational>, init: Vec<BigInt>) -> Result<Self, CFiniteError> {
        if rec.is_empty() {
            return Err(CFiniteError::EmptyRecurrence);
        }
        if rec.len() != init.len() {
            return Err(CFiniteError::LengthMismatch {
                rec: rec.len(),
                init: init.len(),
            });
        }
        Ok(CFiniteSeq {
            rec,
            init,
            gf: None,
        })
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(rec: &[i64], init: &[i64]) -> Result<Self, CFiniteError> {
        CFiniteSeq::new(
            rec.iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
            init.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    /// The order of the stored recurrence.
    #[must_use]
    pub fn order(&self) -> usize {
        self.rec.len()
    }

    #[must_use]
    pub fn rec(&self) -> &[BigRational] {
        &self.rec
    }

    #[must_use]
    pub fn init(&self) -> &[BigInt] {
        &self.init
    }

    /// The cached generating function, if one was attached.
    #[must_use]
    pub fn gf(&self) -> Option<&RationalGF> {
        self.gf.as_ref()
    }

    /// Attaches a generating function (assumed to expand to this sequence).
    #[must_use]
    pub fn with_gf(mut self, gf: RationalGF) -> Self {
        self.gf = Some(gf);
        self
    }

    /// The generating function, cached or computed.
    #[must_use]
    pub fn to_gf(&self) -> RationalGF {
        match &self.gf {
            Some(g) => g.clone(),
            None => from_recurrence(self),
        }
    }

    /// Infinite iterator over terms as exact rationals.
    #[must_use]
    pub fn iter(&self) -> Terms<'_> {
        Terms {
            seq: self,
            window: VecDeque::with_capacity(self.order() + 1),
            pos: 0,
        }
    }

    /// The first `n` terms as integers; fails at the first non-integral term.
    pub fn terms(&self, n: usize) -> Result<Vec<BigInt>, CFiniteError> {
        self.iter()
            .take(n)
            .enumerate()
            .map(|(index, t)| {
                if t.is_integer() {
                    Ok(t.to_integer())
                } else {
                    Err(CFiniteError::NonIntegralSeries { index })
                }
            })
            .collect()
    }
}

impl PartialEq for CFiniteSeq {
    /// Equality of the recurrence data; any cached generating function is
    /// ignored since it is derived.
    fn eq(&self, other: &Self) -> bool {
        self.rec == other.rec && self.init == other.init
    }
}

impl Eq for CFiniteSeq {}

impl fmt::Debug for CFiniteSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CFiniteSeq {{ rec: [")?;
        for (i, c) in self.rec.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "], init: [")?;
        for (i, c) in self.init.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] }}")
    }
}

/// Iterator over the terms of a [`CFiniteSeq`], O(order) state.
pub struct Terms<'a> {
    seq: &'a CFiniteSeq,
    window: VecDeque<BigRational>,
    pos: usize,
}

impl Iterator for Terms<'_> {
    type Item = BigRational;

    fn next(&mut self) -> Option<BigRational> {
        let d = self.seq.order();
        let value = if self.pos < d {
            BigRational::from_integer(self.seq.init[self.pos].clone())
        } else {
            let mut acc = BigRational::zero();
            for (i, c) in self.seq.rec.iter().enumerate() {
                // window holds the previous d terms, most recent last
                acc += c * &self.window[d - 1 - i];
            }
            acc
        };
        self.window.push_back(value.clone());
        if self.window.len() > d {
            self.window.pop_front();
        }
        self.pos += 1;
        Some(value)
    }
}

/// Pull-based iterator over the power-series coefficients of a
/// [`RationalGF`], O(order) state, exact rational terms.
pub struct Series {
    num: Vec<BigInt>,
    den: Vec<BigInt>,
    window: VecDeque<BigRational>,
    pos: usize,
}

impl Iterator for Series {
    type Item = BigRational;

    fn next(&mut self) -> Option<BigRational> {
        let d = self.den.len() - 1;
        let p = self.num.get(self.pos).cloned().unwrap_or_else(BigInt::zero);
        let mut acc = BigRational::from_integer(p);
        let take = d.min(self.pos);
        for i in 1..=take {
            // window holds the previous min(pos, d) coefficients, recent last
            let c = &self.window[self.window.len() - i];
            acc -= BigRational::from_integer(self.den[i].clone()) * c;
        }
        let value = acc / BigRational::from_integer(self.den[0].clone());
        if d > 0 {
            self.window.push_back(value.clone());
            if self.window.len() > d {
                self.window.pop_front();
            }
        }
        self.pos += 1;
        Some(value)
    }
}

/// Streams the power-series coefficients of `gf`.
#[must_use]
pub fn series(gf: &RationalGF) -> Series {
    let den = gf.den().coeffs().to_vec();
    Series {
        num: gf.num().coeffs().to_vec(),
        window: VecDeque::with_capacity(den.len()),
        den,
        pos: 0,
    }
}

/// The first `n` power-series coefficients of `gf` as exact rationals.
#[must_use]
pub fn expand_rational(gf: &RationalGF, n: usize) -> Vec<BigRational> {
    series(gf).take(n).collect()
}

/// The first `n` power-series coefficients of `gf` as integers.
///
/// Every coefficient is divided exactly; the first index at which the
/// division leaves a remainder is reported as an error.
pub fn expand(gf: &RationalGF, n: usize) -> Result<Vec<BigInt>, CFiniteError> {
    series(gf)
        .take(n)
        .enumerate()
        .map(|(index, c)| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(CFiniteError::NonIntegralSeries { index })
            }
        })
        .collect()
}

/// Converts a generating function to an explicit recurrence with initial
/// terms. The order is `max(deg den, deg num + 1, 1)` so that improper
/// fractions (whose series has a polynomial part) round-trip exactly.
pub fn to_recurrence(gf: &RationalGF) -> Result<CFiniteSeq, CFiniteError> {
    let deg_den = gf.den().degree().expect("canonical denominator is nonzero");
    let num_span = gf.num().degree().map_or(0, |d| d + 1);
    let d = deg_den.max(num_span).max(1);
    let q0 = BigRational::from_integer(gf.den().constant_term());
    let rec = (1..=d)
        .map(|i| -BigRational::from_integer(gf.den().coeff(i)) / &q0)
        .collect();
    let init = expand(gf, d)?;
    Ok(CFiniteSeq::new(rec, init)?.with_gf(gf.clone()))
}

/// Converts a recurrence with initial terms to its generating function.
pub fn from_recurrence(seq: &CFiniteSeq) -> RationalGF {
    let d = seq.order();
    let scale = seq
        .rec
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut den = Vec::with_capacity(d + 1);
    den.push(scale.clone());
    for c in &seq.rec {
        let scaled = c * BigRational::from_integer(scale.clone());
        debug_assert!(scaled.is_integer());
        den.push(-scaled.to_integer());
    }
    let den = Polynomial::new(den);
    let init_poly = Polynomial::new(seq.init.clone());
    let num = (&den * &init_poly).truncate(d);
    RationalGF::new(num, den).expect("denominator has nonzero constant term")
}

/// The termwise linear combination `alpha * a + beta * b`.
pub fn combine(
    a: &CFiniteSeq,
    alpha: &BigInt,
    b: &CFiniteSeq,
    beta: &BigInt,
) -> Result<CFiniteSeq, CFiniteError> {
    let g = a.to_gf().linear_combination(alpha, &b.to_gf(), beta)?;
    to_recurrence(&g)
}

/// Drops the first `t` terms: the result is `n -> a(n + t)`.
pub fn shift(a: &CFiniteSeq, t: usize) -> Result<CFiniteSeq, CFiniteError> {
    let g = a.to_gf();
    if t == 0 {
        return to_recurrence(&g);
    }
    let prefix = expand_rational(&g, t);
    let scale = prefix
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let prefix_poly = Polynomial::new(
        prefix
            .iter()
            .map(|c| (c * BigRational::from_integer(scale.clone())).to_integer())
            .collect(),
    );
    let shifted_num = &g.num().scale(&scale) - &(g.den() * &prefix_poly);
    let shifted_num = shifted_num
        .div_xpow(t)
        .expect("dropped terms cancel exactly");
    let g = RationalGF::new(shifted_num, g.den().scale(&scale))?;
    to_recurrence(&g)
}

/// Characteristic polynomial of the recurrence, scaled to integer
/// coefficients: `L y^d - L rec[0] y^(d-1) - ... - L rec[d-1]`.
fn char_poly(seq: &CFiniteSeq) -> Polynomial {
    let d = seq.order();
    let scale = seq
        .rec
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut coeffs = vec![BigInt::zero(); d + 1];
    coeffs[d] = scale.clone();
    for (i, c) in seq.rec.iter().enumerate() {
        let scaled = c * BigRational::from_integer(scale.clone());
        coeffs[d - 1 - i] = -scaled.to_integer();
    }
    Polynomial::new(coeffs)
}

/// Termwise (Hadamard) product of two sequences.
///
/// The characteristic roots of the product divide the pairwise products of
/// the input roots, which is exactly what the resultant
/// `R(x) = Res_y(f_a(y), y^db f_b(x/y))` computes. `R` may carry extraneous
/// factors (repeated root products collide), so the result is re-minimized
/// from actual product terms and certified: both checks below compare
/// enough terms that agreement is a proof, not a heuristic. Two sequences
/// satisfying recurrences of orders `p` and `q` that agree on `p + q` terms
/// agree everywhere, because both satisfy the order `p + q` recurrence of
/// the product of their characteristic polynomials.
pub fn hadamard(a: &CFiniteSeq, b: &CFiniteSeq) -> Result<CFiniteSeq, CFiniteError> {
    let da = a.order();
    let db = b.order();
    // da*db bounds the product's minimal order (tensor product of companion
    // matrices), so this window length makes every comparison below a proof.
    let window = 2 * da * db + da + db + 2;
    let ta = a.terms(window)?;
    let tb = b.terms(window)?;
    let products: Vec<BigInt> = ta.iter().zip(&tb).map(|(x, y)| x * y).collect();

    let fa = char_poly(a);
    let fb = char_poly(b);
    // g(x, y) = y^db * f_b(x / y): coefficient of y^i is b_(db-i) x^(db-i).
    let g: Vec<Polynomial> = (0..=db)
        .map(|i| Polynomial::monomial(fb.coeff(db - i), db - i))
        .collect();
    let r = resultant_y(&fa, &g).expect("characteristic polynomials are nonzero");
    let dr = r
        .degree()
        .expect("leading coefficients exclude a zero resultant");
    assert!(dr <= da * db, "resultant degree exceeds the tensor bound");
    for n in dr..window {
        let mut acc = BigInt::zero();
        for (i, c) in r.coeffs().iter().enumerate() {
            acc += c * &products[n - dr + i];
        }
        assert!(acc.is_zero(), "resultant fails to annihilate the product");
    }
    let minimal = find_recurrence(&products, dr.max(1))?
        .expect("certified annihilator guarantees a recurrence");
    Ok(minimal)
}

/// Guesses the minimal-order recurrence (order at most `max_order`) that
/// fits every given term, trying orders in increasing order.
///
/// Returns `Ok(None)` when no recurrence of order up to `max_order` fits.
/// At least `2 * max_order + 2` terms are required so that a fit is
/// overdetermined rather than an artifact of short data.
pub fn find_recurrence(
    prefix: &[BigInt],
    max_order: usize,
) -> Result<Option<CFiniteSeq>, CFiniteError> {
    let needed = 2 * max_order + 2;
    if prefix.len() < needed {
        return Err(CFiniteError::InsufficientData {
            needed,
            got: prefix.len(),
        });
    }
    for d in 1..=max_order {
        if let Some(rec) = fit_order(prefix, d) {
            let seq = CFiniteSeq::new(rec, prefix[..d].to_vec())?;
            let gf = from_recurrence(&seq);
            return Ok(Some(seq.with_gf(gf)));
        }
    }
    Ok(None)
}

/// Solves `s(n) = sum rec[i] s(n-1-i)` for all `n in d..prefix.len()` by
/// exact Gaussian elimination; free variables are set to zero.
fn fit_order(prefix: &[BigInt], d: usize) -> Option<Vec<BigRational>> {
    let rat = |v: &BigInt| BigRational::from_integer(v.clone());
    let mut rows: Vec<Vec<BigRational>> = (d..prefix.len())
        .map(|n| {
            let mut row: Vec<BigRational> = (1..=d).map(|i| rat(&prefix[n - i])).collect();
            row.push(rat(&prefix[n]));
            row
        })
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; d];
    let mut rank = 0usize;
    for col in 0..d {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for v in rows[rank].iter_mut() {
            *v /= &lead;
        }
        let pivot_row: Vec<BigRational> = rows[rank][col..=d].to_vec();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (value, pivot_value) in row[col..=d].iter_mut().zip(&pivot_row) {
                *value -= &factor * pivot_value;
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }
    for row in &rows {
        if row[..d].iter().all(Zero::is_zero) && !row[d].is_zero() {
            return None;
        }
    }
    Some(
        pivot_of_col
            .iter()
            .map(|p| match p {
                Some(r) => rows[*r][d].clone(),
                None => BigRational::zero(),
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_gf, parse_polynomial};

    fn ints(vs: &[i64]) -> Vec<BigInt> {
        vs.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn pell() -> CFiniteSeq {
        CFiniteSeq::from_ints(&[10, -1], &[0, 1]).unwrap()
    }

    #[test]
    fn expansion_of_pell_gf() {
        let g = parse_gf("x/(1-10x+x^2)").unwrap();
        assert_eq!(
            expand(&g, 8).unwrap(),
            ints(&[0, 1, 10, 99, 980, 9701, 96030, 950599])
        );
        assert_eq!(expand(&g, 0).unwrap(), ints(&[]));
    }

    #[test]
    fn expansion_detects_non_integral() {
        let g = parse_gf("1/(2-x)").unwrap();
        assert_eq!(
            expand(&g, 3),
            Err(CFiniteError::NonIntegralSeries { index: 0 })
        );
        let h = parse_gf("(2,1)/(2,-1)").unwrap();
        // 1, 1, 1/2, ...
        assert_eq!(
            expand(&h, 4),
            Err(CFiniteError::NonIntegralSeries { index: 2 })
        );
        let r = expand_rational(&h, 3);
        assert_eq!(r[2], BigRational::new(BigInt::from(1), BigInt::from(2)));
    }

    #[test]
    fn sequence_iteration_matches_gf_series() {
        let s = pell();
        let g = from_recurrence(&s);
        assert_eq!(g, parse_gf("x/(1-10x+x^2)").unwrap());
        let from_seq: Vec<BigRational> = s.iter().take(20).collect();
        let from_gf = expand_rational(&g, 20);
        assert_eq!(from_seq, from_gf);
        assert_eq!(s.terms(8).unwrap()[7], BigInt::from(950599));
    }

    #[test]
    fn to_recurrence_round_trips() {
        for text in [
            "x/(1-10x+x^2)",
            "(3,164,1)/(-1,99,-99,1)",
            "3/(1-x)",
            "(1,53,9)/(1,-82,-82,1)",
            "0",
            "7",
            "x^2+2x+1",
            "(1,0,0,2)/(1,-1)",
        ] {
            let g = parse_gf(text).unwrap();
            let seq = to_recurrence(&g).unwrap();
            assert_eq!(from_recurrence(&seq), g, "round trip for {text}");
            let direct: Vec<BigRational> = seq.iter().take(16).collect();
            assert_eq!(direct, expand_rational(&g, 16), "terms for {text}");
        }
    }

    #[test]
    fn to_recurrence_shapes() {
        let g = parse_gf("x/(1-10x+x^2)").unwrap();
        let s = to_recurrence(&g).unwrap();
        assert_eq!(s.order(), 2);
        assert_eq!(s.init(), &ints(&[0, 1]));
        assert_eq!(
            s.rec(),
            &[
                BigRational::from_integer(BigInt::from(10)),
                BigRational::from_integer(BigInt::from(-1)),
            ]
        );
        // improper fraction: polynomial part forces a longer init
        let g = parse_gf("(1,0,0,2)/(1,-1)").unwrap();
        let s = to_recurrence(&g).unwrap();
        assert_eq!(s.order(), 4);
        assert_eq!(s.init(), &ints(&[1, 1, 1, 3]));
    }

    #[test]
    fn combine_is_termwise() {
        let a = pell();
        let b = CFiniteSeq::from_ints(&[1], &[5]).unwrap();
        let c = combine(&a, &BigInt::from(3), &b, &BigInt::from(-2)).unwrap();
        let ta = a.terms(12).unwrap();
        let tb = b.terms(12).unwrap();
        let tc = c.terms(12).unwrap();
        for n in 0..12 {
            assert_eq!(tc[n], &ta[n] * 3 - &tb[n] * 2);
        }
    }

    #[test]
    fn shift_drops_terms() {
        let a = pell();
        for t in [0usize, 1, 2, 5] {
            let s = shift(&a, t).unwrap();
            let expected = a.terms(20 + t).unwrap()[t..].to_vec();
            assert_eq!(s.terms(20).unwrap(), expected, "shift by {t}");
        }
        // shifting a polynomial series past its support gives zero
        let p = to_recurrence(&parse_gf("x^2+2x+1").unwrap()).unwrap();
        let s = shift(&p, 5).unwrap();
        assert_eq!(s.terms(4).unwrap(), ints(&[0, 0, 0, 0]));
    }

    #[test]
    fn hadamard_squares_the_pell_sequence() {
        let h = pell();
        let hh = hadamard(&h, &h).unwrap();
        assert_eq!(hh.order(), 3);
        assert_eq!(
            hh.rec(),
            &[
                BigRational::from_integer(BigInt::from(99)),
                BigRational::from_integer(BigInt::from(-99)),
                BigRational::from_integer(BigInt::from(1)),
            ]
        );
        assert_eq!(hh.init(), &ints(&[0, 1, 100]));
        let g = hh.to_gf();
        assert_eq!(g, parse_gf("(x+x^2)/(1-99x+99x^2-x^3)").unwrap());
        let squares = hh.terms(10).unwrap();
        let base = h.terms(10).unwrap();
        for n in 0..10 {
            assert_eq!(squares[n], &base[n] * &base[n]);
        }
    }

    #[test]
    fn hadamard_with_constants_and_deltas() {
        let ones = CFiniteSeq::from_ints(&[1], &[1]).unwrap();
        let h = pell();
        let prod = hadamard(&h, &ones).unwrap();
        assert_eq!(prod.terms(10), h.terms(10));
        // delta at index 1 knocks out everything else
        let delta = CFiniteSeq::from_ints(&[0, 0], &[0, 1]).unwrap();
        let prod = hadamard(&h, &delta).unwrap();
        assert_eq!(prod.terms(6).unwrap(), ints(&[0, 1, 0, 0, 0, 0]));
        // geometric times geometric
        let two = CFiniteSeq::from_ints(&[2], &[1]).unwrap();
        let three = CFiniteSeq::from_ints(&[3], &[1]).unwrap();
        let six = hadamard(&two, &three).unwrap();
        assert_eq!(six.order(), 1);
        assert_eq!(six.terms(6).unwrap(), ints(&[1, 6, 36, 216, 1296, 7776]));
    }

    #[test]
    fn find_recurrence_recovers_known_orders() {
        let h = pell();
        let guessed = find_recurrence(&h.terms(10).unwrap(), 3)
            .unwrap()
            .expect("order 2 fits");
        assert_eq!(guessed.order(), 2);
        assert_eq!(guessed, h);

        let squares: Vec<BigInt> = h.terms(10).unwrap().iter().map(|v| v * v).collect();
        let guessed = find_recurrence(&squares, 4).unwrap().expect("order 3 fits");
        assert_eq!(guessed.order(), 3);
        assert_eq!(
            from_recurrence(&guessed),
            parse_gf("(x+x^2)/(1-99x+99x^2-x^3)").unwrap()
        );
    }

    #[test]
    fn find_recurrence_edge_cases() {
        // not enough data
        assert_eq!(
            find_recurrence(&ints(&[1, 2, 3]), 2),
            Err(CFiniteError::InsufficientData { needed: 6, got: 3 })
        );
        // no C-finite structure of small order: factorials
        let facts = ints(&[1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880]);
        assert_eq!(find_recurrence(&facts, 3).unwrap(), None);
        // all zeros
        let zeros = find_recurrence(&ints(&[0; 8]), 2).unwrap().unwrap();
        assert_eq!(zeros.order(), 1);
        assert!(zeros.rec()[0].is_zero());
        // delta sequence needs order 2 with zero coefficients
        let delta = find_recurrence(&ints(&[0, 1, 0, 0, 0, 0, 0, 0]), 2)
            .unwrap()
            .unwrap();
        assert_eq!(delta.order(), 2);
        assert_eq!(delta.terms(8).unwrap(), ints(&[0, 1, 0, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn find_recurrence_prefers_minimal_order() {
        // constant sequence: order 1 fits, order 2 would too
        let s = find_recurrence(&ints(&[5; 9]), 3).unwrap().unwrap();
        assert_eq!(s.order(), 1);
        assert_eq!(s.rec()[0], BigRational::one());
    }

    #[test]
    fn rational_recurrence_coefficients_work_end_to_end() {
        // s(n) = (1/2) s(n-1) + s(n-2), s0 = 0, s1 = 4: 0, 4, 2, 5, 9/2, ...
        let rec = vec![
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::one(),
        ];
        let s = CFiniteSeq::new(rec, ints(&[0, 4])).unwrap();
        let g = from_recurrence(&s);
        assert_eq!(g, parse_gf("(0,8)/(2,-1,-2)").unwrap());
        assert_eq!(
            s.terms(5),
            Err(CFiniteError::NonIntegralSeries { index: 4 })
        );
        let vals: Vec<BigRational> = s.iter().take(5).collect();
        assert_eq!(vals[4], BigRational::new(BigInt::from(9), BigInt::from(2)));
        // init needs only two terms, both integral, so the round trip works
        let round = to_recurrence(&g).unwrap();
        assert_eq!(round, s);
    }

    #[test]
    fn constructor_validation() {
        assert_eq!(
            CFiniteSeq::from_ints(&[], &[]),
            Err(CFiniteError::EmptyRecurrence)
        );
        assert_eq!(
            CFiniteSeq::from_ints(&[1, 2], &[1]),
            Err(CFiniteError::LengthMismatch { rec: 2, init: 1 })
        );
    }

    #[test]
    fn shared_denominator_gfs_expand_consistently() {
        let den = parse_polynomial("-1,99,-99,1").unwrap();
        let a = RationalGF::new(parse_polynomial("3,164,1").unwrap(), den.clone()).unwrap();
        assert_eq!(expand(&a, 4).unwrap(), ints(&[-3, -461, -45343, -4443321]));
        let t = parse_gf("3/(1-x)").unwrap();
        assert_eq!(expand(&t, 4).unwrap(), ints(&[3, 3, 3, 3]));
    }
}
