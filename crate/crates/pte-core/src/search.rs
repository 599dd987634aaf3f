//! Bounded meet-in-the-middle search for PTE pairs.
//!
//! All size-`m` multisets drawn from `0..=bound` are grouped by the exact
//! signature of their first `target_degree` power sums; any two distinct
//! multisets in one group form a solution of degree at least
//! `target_degree`. Signatures are exact (they fit comfortably in `u64`
//! under the guardrails below), and every emitted pair is nevertheless
//! re-certified in full multiset arithmetic before it leaves this module,
//! so a miscoded signature cannot smuggle out a wrong pair.
//!
//! Searching from 0 loses no generality: degree is preserved by
//! translation, so any solution within a window of width `bound` is a
//! translate of one found here.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;

use crate::pte::{IntMultiset, PTEPair};

/// Hard limits keeping the exhaustive enumeration at desk scale.
pub const MAX_SIZE: usize = 5;
pub const MAX_BOUND: u64 = 100;

/// Parameters for [`find_ideal`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    /// Multiset size `m` (2..=5).
    pub size: usize,
    /// Elements are drawn from `0..=bound` (1..=100).
    pub bound: u64,
    /// Power sums must agree for exponents `1..=target_degree`
    /// (`1 <= target_degree < size`).
    pub target_degree: usize,
    /// Allow repeated elements within one multiset.
    pub allow_repeats: bool,
    /// Slide each pair down so its smallest element is 0, then dedupe;
    /// collapses translate families to one representative.
    pub normalize_translation: bool,
}

impl SearchSpec {
    /// A spec with both flags off.
    #[must_use]
    pub fn new(size: usize, bound: u64, target_degree: usize) -> Self {
        SearchSpec {
            size,
            bound,
            target_degree,
            allow_repeats: false,
            normalize_translation: false,
        }
    }

    /// Checks the guardrails.
    pub fn validate(&self) -> Result<(), SearchError> {
        if self.size < 2 || self.size > MAX_SIZE {
            return Err(SearchError::SizeOutOfRange(self.size));
        }
        if self.bound < 1 || self.bound > MAX_BOUND {
            return Err(SearchError::BoundOutOfRange(self.bound));
        }
        if self.target_degree < 1 || self.target_degree >= self.size {
            return Err(SearchError::DegreeOutOfRange {
                target_degree: self.target_degree,
                size: self.size,
            });
        }
        Ok(())
    }
}

/// Guardrail violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    SizeOutOfRange(usize),
    BoundOutOfRange(u64),
    DegreeOutOfRange { target_degree: usize, size: usize },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::SizeOutOfRange(size) => {
                write!(f, "size {size} outside 2..={MAX_SIZE}")
            }
            SearchError::BoundOutOfRange(bound) => {
                write!(f, "bound {bound} outside 1..={MAX_BOUND}")
            }
            SearchError::DegreeOutOfRange {
                target_degree,
                size,
            } => write!(
                f,
                "target degree {target_degree} outside 1..{size} for size {size}"
            ),
        }
    }
}

impl std::error::Error for SearchError {}

/// One enumerated multiset with its power-sum signature, kept flat so the
/// full table stays compact even near the guardrail limits.
struct Entry {
    signature: [u64; MAX_SIZE - 1],
    combo: [u8; MAX_SIZE],
}

/// Finds every pair of distinct multisets over `0..=bound` whose power
/// sums agree for exponents `1..=target_degree`, sorted lexicographically.
/// The certified degree of each returned pair may exceed the target.
pub fn find_ideal(spec: &SearchSpec) -> Result<Vec<PTEPair>, SearchError> {
    spec.validate()?;
    let mut entries = enumerate(spec);
    entries.sort_unstable_by_key(|entry| entry.signature);

    let mut pairs: BTreeSet<(Vec<u64>, Vec<u64>)> = BTreeSet::new();
    let mut run_start = 0;
    for i in 0..=entries.len() {
        let run_ended = i == entries.len() || entries[i].signature != entries[run_start].signature;
        if run_ended {
            for x in run_start..i {
                for y in x + 1..i {
                    let a = combo_values(&entries[x], spec.size);
                    let b = combo_values(&entries[y], spec.size);
                    let (a, b) = if a <= b { (a, b) } else { (b, a) };
                    pairs.insert(if spec.normalize_translation {
                        translate_to_zero(a, b)
                    } else {
                        (a, b)
                    });
                }
            }
            run_start = i;
        }
    }

    Ok(pairs
        .into_iter()
        .map(|(a, b)| {
            let a = IntMultiset::new(a.into_iter().map(BigInt::from).collect())
                .expect("nonempty combo");
            let b = IntMultiset::new(b.into_iter().map(BigInt::from).collect())
                .expect("nonempty combo");
            let pair = PTEPair::new(a, b).expect("equal sizes");
            assert!(
                pair.degree().at_least(spec.target_degree),
                "signature bucket emitted a pair below the target degree"
            );
            pair
        })
        .collect())
}

/// Enumerates all candidate multisets with their signatures.
fn enumerate(spec: &SearchSpec) -> Vec<Entry> {
    let values = 0..=spec.bound;
    let combos: Box<dyn Iterator<Item = Vec<u64>>> = if spec.allow_repeats {
        Box::new(values.combinations_with_replacement(spec.size))
    } else {
        Box::new(values.combinations(spec.size))
    };
    combos
        .map(|combo| {
            let mut signature = [0u64; MAX_SIZE - 1];
            for (e, slot) in signature.iter_mut().take(spec.target_degree).enumerate() {
                *slot = combo.iter().map(|&v| v.pow(e as u32 + 1)).sum();
            }
            let mut packed = [0u8; MAX_SIZE];
            for (slot, &v) in packed.iter_mut().zip(&combo) {
                *slot = v as u8;
            }
            Entry {
                signature,
                combo: packed,
            }
        })
        .collect()
}

fn combo_values(entry: &Entry, size: usize) -> Vec<u64> {
    entry.combo[..size].iter().map(|&v| u64::from(v)).collect()
}

/// Slides both sides down so the joint minimum is zero.
fn translate_to_zero(a: Vec<u64>, b: Vec<u64>) -> (Vec<u64>, Vec<u64>) {
    let min = a
        .iter()
        .chain(&b)
        .copied()
        .min()
        .expect("multisets are nonempty");
    (
        a.into_iter().map(|v| v - min).collect(),
        b.into_iter().map(|v| v - min).collect(),
    )
}
