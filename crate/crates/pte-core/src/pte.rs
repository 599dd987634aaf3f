//! Integer multisets, power sums, and PTE solution algebra.
//!
//! A solution of size `m` and degree `k` to the equal-sums-of-like-powers
//! problem is a pair of distinct integer multisets of size `m` whose power
//! sums agree for every exponent `1..=k`. A solution with `k = m - 1` is
//! ideal, the maximum possible for distinct multisets. [`pte_degree`]
//! certifies the exact degree by probing power sums; [`poly_criterion`]
//! reaches the same certificate through the difference of the two monic
//! root polynomials, and the two routes are kept as mutual cross-checks.
//!
//! Two classical parametric families are provided: Euler's size-4 family
//! and the Chernick size-6 family of twelve quadratic forms, which is the
//! raw material for the eleven-sequence identity in [`crate::identities`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::Polynomial;

/// Errors from multiset and pair construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PteError {
    /// Multisets must be nonempty.
    EmptyMultiset,
    /// The two sides of a pair must have the same size.
    SizeMismatch { a: usize, b: usize },
}

impl fmt::Display for PteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PteError::EmptyMultiset => write!(f, "multiset must be nonempty"),
            PteError::SizeMismatch { a, b } => {
                write!(f, "multiset sizes differ: {a} vs {b}")
            }
        }
    }
}

impl std::error::Error for PteError {}

/// A finite multiset of integers, stored sorted so that representation
/// equality is multiset equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntMultiset {
    values: Vec<BigInt>,
}

impl IntMultiset {
    /// Builds a multiset; the values are sorted internally.
    pub fn new(mut values: Vec<BigInt>) -> Result<Self, PteError> {
        if values.is_empty() {
            return Err(PteError::EmptyMultiset);
        }
        values.sort();
        Ok(IntMultiset { values })
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(values: &[i64]) -> Result<Self, PteError> {
        IntMultiset::new(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The values in ascending order.
    #[must_use]
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// The sum of `e`-th powers of all elements (`e >= 1`).
    #[must_use]
    pub fn power_sum(&self, e: u32) -> BigInt {
        self.values.iter().map(|v| v.pow(e)).sum()
    }

    /// The monic polynomial whose roots are the elements: prod (z - v).
    #[must_use]
    pub fn root_poly(&self) -> Polynomial {
        self.values.iter().fold(Polynomial::one(), |acc, v| {
            &acc * &Polynomial::new(vec![-v, BigInt::one()])
        })
    }

    /// The image under `v -> m*v + k`.
    #[must_use]
    pub fn affine(&self, m: &BigInt, k: &BigInt) -> IntMultiset {
        IntMultiset::new(self.values.iter().map(|v| v * m + k).collect())
            .expect("image of a nonempty multiset is nonempty")
    }

    /// The smallest element. (Named to avoid colliding with `Ord::min`.)
    #[must_use]
    pub fn smallest(&self) -> &BigInt {
        &self.values[0]
    }
}

impl fmt::Debug for IntMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for IntMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Outcome of degree certification for a pair of equal-size multisets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeResult {
    /// The multisets are equal, so every power sum agrees trivially.
    IdenticalMultisets,
    /// Power sums agree for exponents `1..=k` and differ at `k + 1`;
    /// `Exact(0)` means the plain sums already differ.
    Exact(usize),
}

impl DegreeResult {
    /// Does the certificate witness degree at least `k`?
    #[must_use]
    pub fn at_least(&self, k: usize) -> bool {
        match self {
            DegreeResult::IdenticalMultisets => true,
            DegreeResult::Exact(d) => *d >= k,
        }
    }
}

impl fmt::Display for DegreeResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeResult::IdenticalMultisets => write!(f, "IdenticalMultisets"),
            DegreeResult::Exact(k) => write!(f, "Exact({k})"),
        }
    }
}

/// Certifies the exact PTE degree of `(a, b)` by probing power sums.
///
/// For distinct multisets of size `m` the first disagreeing exponent is at
/// most `m`: power sums through `m` determine the elementary symmetric
/// functions (Newton's identities over the rationals), which determine the
/// multiset. So probing `1..=m` always terminates with a certificate.
pub fn pte_degree(a: &IntMultiset, b: &IntMultiset) -> Result<DegreeResult, PteError> {
    if a.len() != b.len() {
        return Err(PteError::SizeMismatch {
            a: a.len(),
            b: b.len(),
        });
    }
    if a == b {
        return Ok(DegreeResult::IdenticalMultisets);
    }
    let m = a.len() as u32;
    for e in 1..=m {
        if a.power_sum(e) != b.power_sum(e) {
            return Ok(DegreeResult::Exact((e - 1) as usize));
        }
    }
    unreachable!("distinct multisets must disagree by exponent m");
}

/// The polynomial route to the same certificate: for the monic root
/// polynomials `A(z)` and `B(z)` of two size-`m` multisets, power sums agree
/// for `1..=k` exactly when `deg(A - B) <= m - 1 - k`. Returns the
/// difference polynomial together with the implied degree.
pub fn poly_criterion(
    a: &IntMultiset,
    b: &IntMultiset,
) -> Result<(Polynomial, DegreeResult), PteError> {
    if a.len() != b.len() {
        return Err(PteError::SizeMismatch {
            a: a.len(),
            b: b.len(),
        });
    }
    let diff = &a.root_poly() - &b.root_poly();
    let result = match diff.degree() {
        None => DegreeResult::IdenticalMultisets,
        Some(d) => DegreeResult::Exact(a.len() - 1 - d),
    };
    Ok((diff, result))
}

/// A PTE pair with its degree certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PTEPair {
    a: IntMultiset,
    b: IntMultiset,
    degree: DegreeResult,
}

impl PTEPair {
    /// Builds a pair of equal-size multisets and certifies its degree.
    pub fn new(a: IntMultiset, b: IntMultiset) -> Result<Self, PteError> {
        let degree = pte_degree(&a, &b)?;
        Ok(PTEPair { a, b, degree })
    }

    #[must_use]
    pub fn a(&self) -> &IntMultiset {
        &self.a
    }

    #[must_use]
    pub fn b(&self) -> &IntMultiset {
        &self.b
    }

    #[must_use]
    pub fn size(&self) -> usize {
        self.a.len()
    }

    #[must_use]
    pub fn degree(&self) -> DegreeResult {
        self.degree
    }

    /// Ideal means distinct multisets with degree exactly `size - 1`.
    #[must_use]
    pub fn is_ideal(&self) -> bool {
        self.degree == DegreeResult::Exact(self.size() - 1)
    }

    /// Applies `v -> m*v + k` to both sides and re-certifies.
    ///
    /// For `m != 0` the degree is unchanged (the affine closure lemma);
    /// `m = 0` collapses both sides onto `{k, ..., k}`.
    #[must_use]
    pub fn affine(&self, m: &BigInt, k: &BigInt) -> PTEPair {
        PTEPair::new(self.a.affine(m, k), self.b.affine(m, k))
            .expect("sizes are preserved by affine maps")
    }
}

/// Euler's parametric size-4 family:
/// `{a, b, c, a+b+c}` vs `{a+b, a+c, b+c, 0}`, degree at least 2.
pub fn euler_family(a: &BigInt, b: &BigInt, c: &BigInt) -> PTEPair {
    let left =
        IntMultiset::new(vec![a.clone(), b.clone(), c.clone(), a + b + c]).expect("four elements");
    let right = IntMultiset::new(vec![a + b, a + c, b + c, BigInt::zero()]).expect("four elements");
    let pair = PTEPair::new(left, right).expect("equal sizes");
    debug_assert!(pair.degree().at_least(2));
    pair
}

/// The twelve Chernick quadratic forms evaluated at an integer pair
/// `(m, n)`, split into the two sides of the size-6 solution.
///
/// Within each side the values come in negation pairs (`lhs[3] = -lhs[0]`
/// and so on), which is what makes the odd-power sums vanish identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernickTuple {
    pub m: BigInt,
    pub n: BigInt,
    /// `a', b', c', d', e', f'` in order.
    pub lhs: [BigInt; 6],
    /// `p', q', r', s', t', u'` in order.
    pub rhs: [BigInt; 6],
}

/// Labels for [`ChernickTuple::lhs`] then [`ChernickTuple::rhs`], in order.
pub const CHERNICK_LABELS: [&str; 12] = [
    "a'", "b'", "c'", "d'", "e'", "f'", "p'", "q'", "r'", "s'", "t'", "u'",
];

/// Evaluates the Chernick size-6 parametrization at `(m, n)`.
pub fn chernick(m: &BigInt, n: &BigInt) -> ChernickTuple {
    let m2 = m * m;
    let n2 = n * n;
    let mn = m * n;
    let form = |cm2: i64, cmn: i64, cn2: i64| {
        BigInt::from(cm2) * &m2 + BigInt::from(cmn) * &mn + BigInt::from(cn2) * &n2
    };
    let a = form(-5, 4, -3);
    let b = form(-3, 6, 5);
    let c = form(-1, -10, -1);
    let p = form(-5, 6, 3);
    let q = form(-3, -4, -5);
    let r = form(-1, 10, -1);
    ChernickTuple {
        m: m.clone(),
        n: n.clone(),
        lhs: [a.clone(), b.clone(), c.clone(), -a, -b, -c],
        rhs: [p.clone(), q.clone(), r.clone(), -p, -q, -r],
    }
}

impl ChernickTuple {
    /// The two sides as a certified PTE pair.
    #[must_use]
    pub fn pair(&self) -> PTEPair {
        let a = IntMultiset::new(self.lhs.to_vec()).expect("six elements");
        let b = IntMultiset::new(self.rhs.to_vec()).expect("six elements");
        PTEPair::new(a, b).expect("equal sizes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(vs: &[i64]) -> IntMultiset {
        IntMultiset::from_ints(vs).unwrap()
    }

    #[test]
    fn multiset_is_sorted_and_canonical() {
        let a = ms(&[3, 1, 2]);
        let b = ms(&[2, 3, 1]);
        assert_eq!(a, b);
        assert_eq!(
            a.values(),
            &[BigInt::from(1), BigInt::from(2), BigInt::from(3)]
        );
        assert_eq!(a.smallest(), &BigInt::from(1));
        assert!(IntMultiset::new(vec![]).is_err());
    }

    #[test]
    fn power_sums_of_the_size_4_example() {
        let a = ms(&[1, 21, 36, 56]);
        let b = ms(&[2, 18, 39, 55]);
        assert_eq!(a.power_sum(1), BigInt::from(114));
        assert_eq!(b.power_sum(1), BigInt::from(114));
        assert_eq!(a.power_sum(2), BigInt::from(4874));
        assert_eq!(b.power_sum(2), BigInt::from(4874));
        assert_eq!(a.power_sum(3), BigInt::from(231534));
        assert_eq!(b.power_sum(3), BigInt::from(231534));
        assert_eq!(a.power_sum(4), BigInt::from(11708594));
        assert_eq!(b.power_sum(4), BigInt::from(11569058));
    }

    #[test]
    fn degree_certification() {
        let a = ms(&[1, 21, 36, 56]);
        let b = ms(&[2, 18, 39, 55]);
        assert_eq!(pte_degree(&a, &b).unwrap(), DegreeResult::Exact(3));
        let pair = PTEPair::new(a.clone(), b.clone()).unwrap();
        assert!(pair.is_ideal());

        assert_eq!(
            pte_degree(&a, &a).unwrap(),
            DegreeResult::IdenticalMultisets
        );
        assert_eq!(
            pte_degree(&ms(&[1, 2]), &ms(&[1, 3])).unwrap(),
            DegreeResult::Exact(0)
        );
        assert_eq!(
            pte_degree(&ms(&[0, 3]), &ms(&[1, 2])).unwrap(),
            DegreeResult::Exact(1)
        );
        assert!(matches!(
            pte_degree(&ms(&[1]), &ms(&[1, 2])),
            Err(PteError::SizeMismatch { a: 1, b: 2 })
        ));
    }

    #[test]
    fn poly_criterion_matches_probing() {
        let cases = [
            (ms(&[1, 21, 36, 56]), ms(&[2, 18, 39, 55])),
            (ms(&[0, 3]), ms(&[1, 2])),
            (ms(&[1, 2]), ms(&[1, 3])),
            (ms(&[5, 5, 5]), ms(&[5, 5, 5])),
            (ms(&[0, 4, 7, 11]), ms(&[1, 2, 9, 10])),
        ];
        for (a, b) in &cases {
            let probed = pte_degree(a, b).unwrap();
            let (diff, implied) = poly_criterion(a, b).unwrap();
            assert_eq!(probed, implied, "{a:?} vs {b:?}");
            if let DegreeResult::Exact(k) = implied {
                assert_eq!(diff.degree(), Some(a.len() - 1 - k));
            } else {
                assert!(diff.is_zero());
            }
        }
    }

    #[test]
    fn root_poly_expands_correctly() {
        let a = ms(&[1, 2]);
        assert_eq!(a.root_poly(), Polynomial::from_ints(&[2, -3, 1]));
        let b = ms(&[-1, 1]);
        assert_eq!(b.root_poly(), Polynomial::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn affine_preserves_degree() {
        let pair = PTEPair::new(ms(&[1, 21, 36, 56]), ms(&[2, 18, 39, 55])).unwrap();
        let moved = pair.affine(&BigInt::from(-3), &BigInt::from(17));
        assert_eq!(moved.degree(), DegreeResult::Exact(3));
        assert_eq!(moved.a().smallest(), &BigInt::from(17 - 3 * 56));
        let collapsed = pair.affine(&BigInt::zero(), &BigInt::from(4));
        assert_eq!(collapsed.degree(), DegreeResult::IdenticalMultisets);
    }

    #[test]
    fn euler_family_degree() {
        let pair = euler_family(&BigInt::from(1), &BigInt::from(2), &BigInt::from(5));
        // {1, 2, 5, 8} vs {3, 6, 7, 0}
        assert_eq!(pair.a(), &ms(&[1, 2, 5, 8]));
        assert_eq!(pair.b(), &ms(&[0, 3, 6, 7]));
        assert_eq!(pair.degree(), DegreeResult::Exact(2));
        // a zero parameter makes the two sides coincide
        let collapsed = euler_family(&BigInt::zero(), &BigInt::from(2), &BigInt::from(5));
        assert_eq!(collapsed.degree(), DegreeResult::IdenticalMultisets);
    }

    #[test]
    fn chernick_is_ideal_generically() {
        let t = chernick(&BigInt::from(3), &BigInt::from(1));
        let pair = t.pair();
        assert_eq!(pair.degree(), DegreeResult::Exact(5));
        assert!(pair.is_ideal());
        // antisymmetry within each side
        for i in 0..3 {
            assert_eq!(t.lhs[i + 3], -&t.lhs[i]);
            assert_eq!(t.rhs[i + 3], -&t.rhs[i]);
        }
    }

    #[test]
    fn chernick_values_at_10_1() {
        let t = chernick(&BigInt::from(10), &BigInt::from(1));
        assert_eq!(t.lhs[0], BigInt::from(-463)); // a'
        assert_eq!(t.lhs[1], BigInt::from(-235)); // b'
        assert_eq!(t.lhs[2], BigInt::from(-201)); // c'
        assert_eq!(t.rhs[0], BigInt::from(-437)); // p'
        assert_eq!(t.rhs[1], BigInt::from(-345)); // q'
        assert_eq!(t.rhs[2], BigInt::from(-1)); // r'
        assert_eq!(t.rhs[5], BigInt::from(1)); // u'
    }

    #[test]
    fn chernick_degenerate_parameters() {
        // (1, 0): lhs {-5,-3,-1,5,3,1}, rhs {-5,-3,-1,5,3,1} coincide
        let t = chernick(&BigInt::from(1), &BigInt::from(0));
        assert_eq!(t.pair().degree(), DegreeResult::IdenticalMultisets);
        let z = chernick(&BigInt::zero(), &BigInt::zero());
        assert_eq!(z.pair().degree(), DegreeResult::IdenticalMultisets);
    }

    #[test]
    fn power_sum_handles_large_values() {
        let big = BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        let a = IntMultiset::new(vec![big.clone()]).unwrap();
        assert_eq!(a.power_sum(2), &big * &big);
    }
}
