//! The eleven-sequence ideal-PTE identity and the cubic identity of
//! Ramanujan, with exact whole-range verifiers.
//!
//! Eleven integer sequences `a..f, p..t` are defined by rational generating
//! functions over the shared denominator `1 - 99x + 99x^2 - x^3` (except
//! `t`, which is the constant 3 with denominator `1 - x`). For every
//! `k >= 0` and every exponent `j` in `1..=5`,
//!
//! ```text
//! a^j + b^j + c^j + d^j + e^j + f^j - p^j - q^j - r^j - s^j - t^j = 1,
//! ```
//!
//! i.e. `{a,b,c,d,e,f}` and `{p,q,r,s,t,1}` form an ideal PTE solution of
//! size 6 at every index. The identity has a dual construction: substitute
//! `(m, n) = (h(k+1), h(k))` from [`crate::pell`] into the Chernick forms
//! of [`crate::pte`] and apply the affine map `v -> v + 2u'`, where the
//! norm invariant forces `u' = 1`. Both routes are implemented
//! independently and compared term by term; nothing here trusts a single
//! code path.
//!
//! The same machinery verifies Ramanujan's identity
//! `a(n)^3 + b(n)^3 - c(n)^3 = (-1)^n` for the three cubic sequences, and
//! reconstructs the proof objects `H1 = sum h(k)^2 x^k`,
//! `H2 = sum h(k+1) h(k) x^k`, `H3 = sum h(k+1)^2 x^k` by Hadamard/shift
//! algebra alone.

use std::ops::Range;

use num_bigint::BigInt;
use num_traits::One;

use crate::cfinite::{self, CFiniteSeq};
use crate::gf::RationalGF;
use crate::pell::h_iter;
use crate::poly::Polynomial;
use crate::pte::chernick;

/// Labels of the eleven sequences, in theorem order.
pub const LABELS: [&str; 11] = ["a", "b", "c", "d", "e", "f", "p", "q", "r", "s", "t"];

/// Ascending numerators of the ten cubic-denominator sequences, in
/// [`LABELS`] order (excluding `t`).
const NUMERATORS: [[i64; 3]; 10] = [
    [3, 164, 1],   // a
    [1, 134, -7],  // b
    [-1, 298, -1], // c
    [-7, 228, -5], // d
    [-5, 258, 3],  // e
    [-3, 94, -3],  // f
    [3, 138, -5],  // p
    [1, 244, 3],   // q
    [-7, 254, 1],  // r
    [-5, 148, -7], // s
];

/// The shared denominator `x^3 - 99x^2 + 99x - 1`, ascending.
const DENOMINATOR: [i64; 4] = [-1, 99, -99, 1];

/// The generating function for one of the eleven labels.
#[must_use]
pub fn sequence_gf(label: &str) -> Option<RationalGF> {
    let index = LABELS.iter().position(|&l| l == label)?;
    let gf = if label == "t" {
        RationalGF::new(Polynomial::from_ints(&[3]), Polynomial::from_ints(&[1, -1]))
    } else {
        RationalGF::new(
            Polynomial::from_ints(&NUMERATORS[index]),
            Polynomial::from_ints(&DENOMINATOR),
        )
    };
    Some(gf.expect("fixed data is well formed"))
}

/// All eleven generating functions in [`LABELS`] order.
#[must_use]
pub fn eleven_gfs() -> Vec<RationalGF> {
    LABELS
        .iter()
        .map(|l| sequence_gf(l).expect("known label"))
        .collect()
}

/// The three Ramanujan generating functions `(a, b, c)` over the shared
/// denominator `1 - 82x - 82x^2 + x^3`.
#[must_use]
pub fn ramanujan_gfs() -> [RationalGF; 3] {
    let den = Polynomial::from_ints(&[1, -82, -82, 1]);
    let make = |num: [i64; 3]| {
        RationalGF::new(Polynomial::from_ints(&num), den.clone())
            .expect("fixed data is well formed")
    };
    [make([1, 53, 9]), make([2, -26, -12]), make([2, 8, -10])]
}

/// The Ramanujan sequences `(a, b, c)` as recurrence handles, each
/// satisfying `s_n = 82 s_{n-1} + 82 s_{n-2} - s_{n-3}` (or a divisor of
/// that recurrence after minimization).
#[must_use]
pub fn ramanujan_sequences() -> [CFiniteSeq; 3] {
    ramanujan_gfs().map(|g| cfinite::to_recurrence(&g).expect("ramanujan series are integral"))
}

/// The eleven sequences bundled with their defining generating functions.
#[derive(Debug, Clone)]
pub struct ElevenSequences {
    seqs: Vec<CFiniteSeq>,
}

impl ElevenSequences {
    /// Builds the sequences from the stated generating functions.
    #[must_use]
    pub fn via_gf() -> Self {
        let seqs = eleven_gfs()
            .iter()
            .map(|g| cfinite::to_recurrence(g).expect("theorem series are integral"))
            .collect();
        ElevenSequences { seqs }
    }

    /// Reconstructs the sequences from the Chernick substitution alone:
    /// twelve terms of each label are produced by [`chernick_tuple_at`] and
    /// a minimal recurrence is fitted. No generating-function data is
    /// consulted, which makes this a genuinely independent construction.
    #[must_use]
    pub fn via_chernick() -> Self {
        const PREFIX: usize = 12;
        let mut columns: Vec<Vec<BigInt>> = (0..11).map(|_| Vec::with_capacity(PREFIX)).collect();
        for tuple in chernick_tuples(0..PREFIX) {
            for (column, value) in columns.iter_mut().zip(tuple) {
                column.push(value);
            }
        }
        let seqs = columns
            .iter()
            .map(|column| {
                cfinite::find_recurrence(column, 4)
                    .expect("twelve terms suffice for order four")
                    .expect("each label satisfies a short recurrence")
            })
            .collect();
        ElevenSequences { seqs }
    }

    /// The sequences in [`LABELS`] order.
    #[must_use]
    pub fn sequences(&self) -> &[CFiniteSeq] {
        &self.seqs
    }

    /// The eleven values at index `k`, in [`LABELS`] order.
    #[must_use]
    pub fn tuple_at(&self, k: usize) -> [BigInt; 11] {
        let values: Vec<BigInt> = self
            .seqs
            .iter()
            .map(|s| {
                s.terms(k + 1)
                    .expect("theorem sequences are integral")
                    .pop()
                    .expect("k + 1 terms requested")
            })
            .collect();
        values.try_into().expect("eleven sequences")
    }
}

/// The identity's left side `sum of six j-th powers minus sum of five`
/// for one eleven-tuple of values.
#[must_use]
pub fn identity_lhs(values: &[BigInt; 11], j: u32) -> BigInt {
    let plus: BigInt = values[..6].iter().map(|v| v.pow(j)).sum();
    let minus: BigInt = values[6..].iter().map(|v| v.pow(j)).sum();
    plus - minus
}

/// The theorem tuple at index `k` built by Chernick substitution: evaluate
/// the twelve forms at `(m, n) = (h(k+1), h(k))` and shift every value by
/// `2u'`. The construction's own `r' + 2u'` collapses to `u' = 1` (the
/// Pell invariant), which is the literal 1 on the identity's right side;
/// the remaining five right-side values are relabeled `p, q, r, s, t`.
#[must_use]
pub fn chernick_tuple_at(k: usize) -> [BigInt; 11] {
    chernick_tuples(k..k + 1).next().expect("nonempty range")
}

/// Streams theorem tuples for `k` in `range` with one pass over `h`.
pub fn chernick_tuples(range: Range<usize>) -> impl Iterator<Item = [BigInt; 11]> {
    let mut hs = h_iter();
    let mut n = hs.next().expect("infinite"); // h(k)
    let mut m = hs.next().expect("infinite"); // h(k+1)
    for _ in 0..range.start {
        n = std::mem::replace(&mut m, hs.next().expect("infinite"));
    }
    range.map(move |_| {
        let t = chernick(&m, &n);
        let two_u = 2 * &t.rhs[5];
        let shift = |v: &BigInt| v + &two_u;
        let tuple = [
            shift(&t.lhs[0]), // a
            shift(&t.lhs[1]), // b
            shift(&t.lhs[2]), // c
            shift(&t.lhs[3]), // d
            shift(&t.lhs[4]), // e
            shift(&t.lhs[5]), // f
            shift(&t.rhs[0]), // p  (from p')
            shift(&t.rhs[1]), // q  (from q')
            shift(&t.rhs[3]), // r  (from s')
            shift(&t.rhs[4]), // s  (from t')
            shift(&t.rhs[5]), // t  (from u'; equals 3u')
        ];
        n = std::mem::replace(&mut m, hs.next().expect("infinite"));
        tuple
    })
}

/// A `(k, j)` at which the identity's left side missed 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityDeviation {
    pub k: usize,
    pub power: u32,
    pub value: BigInt,
}

/// Evaluates the identity for all `k <= max_k` and every exponent in
/// `powers`, returning each deviation from 1 (sorted by `k`, then power).
///
/// `workers` splits the index range into contiguous chunks verified on
/// separate threads; results are concatenated in range order, so the
/// output is byte-for-byte independent of `workers`.
#[must_use]
pub fn verify_identity(max_k: usize, powers: &[u32], workers: usize) -> Vec<IdentityDeviation> {
    let mut deviations = run_chunked(max_k + 1, workers, |chunk| {
        let mut deviations = Vec::new();
        let gfs = eleven_gfs();
        let mut streams: Vec<_> = gfs.iter().map(cfinite::series).collect();
        for stream in &mut streams {
            for _ in 0..chunk.start {
                stream.next();
            }
        }
        for k in chunk {
            let values: Vec<BigInt> = streams
                .iter_mut()
                .map(|s| {
                    let c = s.next().expect("infinite");
                    debug_assert!(c.is_integer());
                    c.to_integer()
                })
                .collect();
            let values: [BigInt; 11] = values.try_into().expect("eleven streams");
            for &j in powers {
                let lhs = identity_lhs(&values, j);
                if !lhs.is_one() {
                    deviations.push(IdentityDeviation {
                        k,
                        power: j,
                        value: lhs,
                    });
                }
            }
        }
        deviations
    });
    deviations.sort_by_key(|d| (d.k, d.power));
    deviations
}

/// A label and index where the two constructions disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualDeviation {
    pub k: usize,
    pub label: &'static str,
    pub via_gf: BigInt,
    pub via_chernick: BigInt,
}

/// Compares generating-function expansion against Chernick substitution
/// for every label and every `k <= max_k`.
#[must_use]
pub fn verify_dual_construction(max_k: usize) -> Vec<DualDeviation> {
    let gfs = eleven_gfs();
    let mut streams: Vec<_> = gfs.iter().map(cfinite::series).collect();
    let mut deviations = Vec::new();
    for (k, tuple) in chernick_tuples(0..max_k + 1).enumerate() {
        for (i, substituted) in tuple.into_iter().enumerate() {
            let expanded = streams[i].next().expect("infinite");
            debug_assert!(expanded.is_integer());
            let expanded = expanded.to_integer();
            if expanded != substituted {
                deviations.push(DualDeviation {
                    k,
                    label: LABELS[i],
                    via_gf: expanded,
                    via_chernick: substituted,
                });
            }
        }
    }
    deviations
}

/// An `n` at which `a^3 + b^3 - c^3` missed `(-1)^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamanujanDeviation {
    pub n: usize,
    pub value: BigInt,
    pub expected: BigInt,
}

/// Checks `a(n)^3 + b(n)^3 - c(n)^3 = (-1)^n` for all `n <= max_n`.
/// Chunking semantics are the same as in [`verify_identity`].
#[must_use]
pub fn verify_ramanujan(max_n: usize, workers: usize) -> Vec<RamanujanDeviation> {
    run_chunked(max_n + 1, workers, |chunk| {
        let mut deviations = Vec::new();
        let [ga, gb, gc] = ramanujan_gfs();
        let mut streams = [
            cfinite::series(&ga),
            cfinite::series(&gb),
            cfinite::series(&gc),
        ];
        for stream in &mut streams {
            for _ in 0..chunk.start {
                stream.next();
            }
        }
        for n in chunk {
            let [a, b, c] = streams.each_mut().map(|s| {
                let v = s.next().expect("infinite");
                debug_assert!(v.is_integer());
                v.to_integer()
            });
            let value = a.pow(3) + b.pow(3) - c.pow(3);
            let expected = if n % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            if value != expected {
                deviations.push(RamanujanDeviation { n, value, expected });
            }
        }
        deviations
    })
}

/// The three proof-object series for the squared Pell sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HForms {
    /// `sum h(k)^2 x^k`
    pub h1: RationalGF,
    /// `sum h(k+1) h(k) x^k`
    pub h2: RationalGF,
    /// `sum h(k+1)^2 x^k`
    pub h3: RationalGF,
}

/// Reconstructs `H1`, `H2`, `H3` by sequence algebra alone: Hadamard
/// products and shifts of the bare recurrence `h`, no closed forms.
#[must_use]
pub fn derive_h_forms() -> HForms {
    let h = CFiniteSeq::from_ints(&[10, -1], &[0, 1]).expect("valid recurrence");
    let h_next = cfinite::shift(&h, 1).expect("shift of an integer sequence");
    let h1 = cfinite::hadamard(&h, &h).expect("integer sequences");
    let h2 = cfinite::hadamard(&h_next, &h).expect("integer sequences");
    let h3 = cfinite::hadamard(&h_next, &h_next).expect("integer sequences");
    HForms {
        h1: h1.to_gf(),
        h2: h2.to_gf(),
        h3: h3.to_gf(),
    }
}

/// The displayed rational functions for `H1`, `H2`, `H3`, canonicalized:
/// `-x(x+1)`, `-10x`, and `-x-1` over `x^3 - 99x^2 + 99x - 1`.
#[must_use]
pub fn expected_h_forms() -> HForms {
    let den = Polynomial::from_ints(&[-1, 99, -99, 1]);
    let make = |num: &[i64]| {
        RationalGF::new(Polynomial::from_ints(num), den.clone()).expect("fixed data is well formed")
    };
    HForms {
        h1: make(&[0, -1, -1]),
        h2: make(&[0, -10]),
        h3: make(&[-1, -1]),
    }
}

/// Assembles the a-sequence generating function from the proof objects:
/// `-5 H3 + 4 H2 - 3 H1 + 2/(1-x)`, following `a = a' + 2u'` with
/// `a' = -5 m^2 + 4 mn - 3 n^2` at `(m, n) = (h(k+1), h(k))`.
#[must_use]
pub fn assemble_a_gf(forms: &HForms) -> RationalGF {
    let two_over_1mx =
        RationalGF::new(Polynomial::from_ints(&[2]), Polynomial::from_ints(&[1, -1]))
            .expect("fixed data is well formed");
    forms
        .h3
        .linear_combination(&BigInt::from(-5), &forms.h2, &BigInt::from(4))
        .and_then(|acc| acc.linear_combination(&BigInt::one(), &forms.h1, &BigInt::from(-3)))
        .and_then(|acc| acc.add(&two_over_1mx))
        .expect("denominators stay expandable")
}

/// Splits `0..total` into up to `workers` contiguous chunks, runs `f` on
/// each (in parallel when `workers > 1`), and concatenates the results in
/// chunk order.
fn run_chunked<T, F>(total: usize, workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<usize>) -> Vec<T> + Sync,
{
    let workers = workers.max(1).min(total.max(1));
    if workers == 1 {
        return f(0..total);
    }
    let chunk_len = total.div_ceil(workers);
    let chunks: Vec<Range<usize>> = (0..workers)
        .map(|w| (w * chunk_len).min(total)..((w + 1) * chunk_len).min(total))
        .filter(|r| !r.is_empty())
        .collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .into_iter()
            .map(|chunk| scope.spawn(|| f(chunk)))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verifier thread panicked"))
            .collect()
    })
}
