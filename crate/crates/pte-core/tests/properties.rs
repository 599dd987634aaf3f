//! Randomized invariants across the polynomial, generating-function,
//! sequence, and multiset layers. Every property is exact: no tolerance,
//! no sampling error — a single counterexample is a bug.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use pte_core::cfinite::{
    self, combine, expand, expand_rational, find_recurrence, from_recurrence, hadamard, shift,
    to_recurrence, CFiniteSeq,
};
use pte_core::pte::{poly_criterion, pte_degree, IntMultiset};
use pte_core::resultant::resultant_y;
use pte_core::search::{find_ideal, SearchSpec};
use pte_core::{Polynomial, RationalGF};

fn poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-20i64..=20, 0..=max_len).prop_map(|v| Polynomial::from_ints(&v))
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

/// A polynomial with nonzero constant term: a valid denominator and a
/// safe cofactor for denominators.
fn unit_at_zero_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    (
        prop_oneof![1i64..=20, -20i64..=-1],
        prop::collection::vec(-20i64..=20, 0..=max_len.saturating_sub(1)),
    )
        .prop_map(|(c0, mut rest)| {
            rest.insert(0, c0);
            Polynomial::from_ints(&rest)
        })
}

fn gf() -> impl Strategy<Value = RationalGF> {
    (poly(5), unit_at_zero_poly(4))
        .prop_map(|(num, den)| RationalGF::new(num, den).expect("den(0) != 0"))
}

/// A random integer C-finite sequence of order 1..=3.
fn seq() -> impl Strategy<Value = CFiniteSeq> {
    (1usize..=3)
        .prop_flat_map(|order| {
            (
                prop::collection::vec(-3i64..=3, order),
                prop::collection::vec(-5i64..=5, order),
            )
        })
        .prop_map(|(rec, init)| CFiniteSeq::from_ints(&rec, &init).expect("matching lengths"))
}

fn ints(values: &[BigInt]) -> Vec<BigInt> {
    values.to_vec()
}

proptest! {
    #[test]
    fn poly_mul_commutes(a in poly(6), b in poly(6)) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn poly_mul_distributes(a in poly(5), b in poly(5), c in poly(5)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn poly_exact_div_inverts_mul(a in poly(5), b in nonzero_poly(5)) {
        prop_assert_eq!((&a * &b).exact_div(&b), Some(a));
    }

    #[test]
    fn poly_gcd_divides_both(a in poly(5), b in poly(5)) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let g = Polynomial::gcd(&a, &b);
        prop_assert!(a.exact_div(&g).is_some());
        prop_assert!(b.exact_div(&g).is_some());
    }

    #[test]
    fn poly_gcd_sees_common_factor(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(3)) {
        let g = Polynomial::gcd(&(&a * &c), &(&b * &c));
        prop_assert!(g.exact_div(&c.primitive_part()).is_some());
    }

    #[test]
    fn gf_is_scaling_invariant(num in poly(4), den in unit_at_zero_poly(3), c in unit_at_zero_poly(3)) {
        let plain = RationalGF::new(num.clone(), den.clone()).unwrap();
        let scaled = RationalGF::new(&num * &c, &den * &c).unwrap();
        prop_assert_eq!(plain, scaled);
    }

    #[test]
    fn gf_linear_combination_matches_series(a in gf(), b in gf(), alpha in -9i64..=9, beta in -9i64..=9) {
        let combo = a
            .linear_combination(&BigInt::from(alpha), &b, &BigInt::from(beta))
            .unwrap();
        let sa = expand_rational(&a, 12);
        let sb = expand_rational(&b, 12);
        let sc = expand_rational(&combo, 12);
        for i in 0..12 {
            let want = BigRational::from(BigInt::from(alpha)) * &sa[i]
                + BigRational::from(BigInt::from(beta)) * &sb[i];
            prop_assert_eq!(&sc[i], &want);
        }
    }

    #[test]
    fn gf_mul_matches_cauchy_product(a in gf(), b in gf()) {
        let product = a.mul(&b).unwrap();
        let sa = expand_rational(&a, 10);
        let sb = expand_rational(&b, 10);
        let sp = expand_rational(&product, 10);
        for n in 0..10 {
            let want: BigRational = (0..=n).map(|i| &sa[i] * &sb[n - i]).sum();
            prop_assert_eq!(&sp[n], &want);
        }
    }

    #[test]
    fn resultant_vanishes_on_common_factor(
        u in nonzero_poly(2),
        w in prop::collection::vec(poly(2), 1..=3),
        c in -5i64..=5,
    ) {
        // f = (y - c) u(y), g = (y - c) w(x, y): shared root y = c.
        let y_minus_c: Vec<BigInt> = vec![BigInt::from(-c), BigInt::from(1)];
        let u_coeffs = ints(u.coeffs());
        let mut f_coeffs = vec![BigInt::from(0); u_coeffs.len() + 1];
        for (i, yc) in y_minus_c.iter().enumerate() {
            for (j, uc) in u_coeffs.iter().enumerate() {
                let term = yc * uc;
                f_coeffs[i + j] += term;
            }
        }
        let f = Polynomial::new(f_coeffs);
        let mut g = vec![Polynomial::zero(); w.len() + 1];
        for (i, yc) in y_minus_c.iter().enumerate() {
            for (j, wc) in w.iter().enumerate() {
                g[i + j] = &g[i + j] + &wc.scale(yc);
            }
        }
        prop_assume!(!w.iter().all(Polynomial::is_zero));
        let res = resultant_y(&f, &g).unwrap();
        prop_assert!(res.is_zero());
    }

    #[test]
    fn resultant_of_linear_f_substitutes(
        a in prop_oneof![1i64..=5, -5i64..=-1],
        b in -5i64..=5,
        g in prop::collection::vec(poly(3), 1..=3),
    ) {
        // For f = a y + b, Res_y(f, g) = a^m g(x, -b/a) = sum g_i (-b)^i a^(m-i).
        prop_assume!(!g.iter().all(Polynomial::is_zero));
        let trimmed = g.len() - 1 - g.iter().rev().position(|p| !p.is_zero()).unwrap();
        let f = Polynomial::from_ints(&[b, a]);
        let res = resultant_y(&f, &g).unwrap();
        let mut want = Polynomial::zero();
        for (i, gi) in g.iter().enumerate().take(trimmed + 1) {
            let factor = BigInt::from(-b).pow(i as u32) * BigInt::from(a).pow((trimmed - i) as u32);
            want = &want + &gi.scale(&factor);
        }
        prop_assert_eq!(res, want);
    }

    #[test]
    fn sequence_expansion_round_trips(s in seq()) {
        let g = from_recurrence(&s);
        prop_assert_eq!(expand(&g, 20).unwrap(), s.terms(20).unwrap());
        let back = to_recurrence(&g).unwrap();
        prop_assert_eq!(back.terms(25).unwrap(), s.terms(25).unwrap());
    }

    #[test]
    fn shift_drops_a_prefix(s in seq(), t in 0usize..=4) {
        let shifted = shift(&s, t).unwrap();
        let full = s.terms(20 + t).unwrap();
        prop_assert_eq!(shifted.terms(20).unwrap(), full[t..].to_vec());
    }

    #[test]
    fn combine_is_termwise_linear(a in seq(), b in seq(), alpha in -9i64..=9, beta in -9i64..=9) {
        let c = combine(&a, &BigInt::from(alpha), &b, &BigInt::from(beta)).unwrap();
        let ta = a.terms(20).unwrap();
        let tb = b.terms(20).unwrap();
        let tc = c.terms(20).unwrap();
        for i in 0..20 {
            prop_assert_eq!(&tc[i], &(BigInt::from(alpha) * &ta[i] + BigInt::from(beta) * &tb[i]));
        }
    }

    #[test]
    fn hadamard_is_termwise_product(a in seq(), b in seq()) {
        let h = hadamard(&a, &b).unwrap();
        let ta = a.terms(50).unwrap();
        let tb = b.terms(50).unwrap();
        let th = h.terms(50).unwrap();
        for i in 0..50 {
            prop_assert_eq!(&th[i], &(&ta[i] * &tb[i]));
        }
    }

    #[test]
    fn find_recurrence_refits_expansions(s in seq()) {
        let window = 2 * s.order() + 6;
        let prefix = s.terms(window).unwrap();
        let found = find_recurrence(&prefix, s.order()).unwrap()
            .expect("an order within the cap generated the data");
        prop_assert!(found.order() <= s.order());
        prop_assert_eq!(found.terms(window + 10).unwrap(), s.terms(window + 10).unwrap());
    }

    #[test]
    fn degree_probes_match_polynomial_criterion(size in 1usize..=5, seed in any::<u64>()) {
        // Derive both multisets from one seed so duplicates show up often.
        let mut state = seed | 1;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 21) as i64 - 10
        };
        let a: Vec<i64> = (0..size).map(|_| next()).collect();
        let b: Vec<i64> = (0..size).map(|_| next()).collect();
        let a = IntMultiset::from_ints(&a).unwrap();
        let b = IntMultiset::from_ints(&b).unwrap();
        let direct = pte_degree(&a, &b).unwrap();
        let (_, via_poly) = poly_criterion(&a, &b).unwrap();
        prop_assert_eq!(direct, via_poly);
    }

    #[test]
    fn affine_preserves_degree(
        size in 2usize..=5,
        seed in any::<u64>(),
        m in prop_oneof![1i64..=9, -9i64..=-1],
        k in -99i64..=99,
    ) {
        let mut state = seed | 1;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 41) as i64 - 20
        };
        let a: Vec<i64> = (0..size).map(|_| next()).collect();
        let b: Vec<i64> = (0..size).map(|_| next()).collect();
        let a = IntMultiset::from_ints(&a).unwrap();
        let b = IntMultiset::from_ints(&b).unwrap();
        let before = pte_degree(&a, &b).unwrap();
        let (m, k) = (BigInt::from(m), BigInt::from(k));
        let after = pte_degree(&a.affine(&m, &k), &b.affine(&m, &k)).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn search_counts_match_brute_force(
        size in 2usize..=3,
        bound in 3u64..=7,
        repeats in any::<bool>(),
        degree_pick in any::<u8>(),
    ) {
        use itertools::Itertools;
        let degree = 1 + (degree_pick as usize) % (size - 1).max(1);
        let spec = SearchSpec {
            size,
            bound,
            target_degree: degree,
            allow_repeats: repeats,
            normalize_translation: false,
        };
        let found = find_ideal(&spec).unwrap();
        let combos: Vec<Vec<u64>> = if repeats {
            (0..=bound).combinations_with_replacement(size).collect()
        } else {
            (0..=bound).combinations(size).collect()
        };
        let mut expected = 0usize;
        for i in 0..combos.len() {
            for j in i + 1..combos.len() {
                let agree = (1..=degree as u32).all(|e| {
                    let pa: u64 = combos[i].iter().map(|v| v.pow(e)).sum();
                    let pb: u64 = combos[j].iter().map(|v| v.pow(e)).sum();
                    pa == pb
                });
                if agree {
                    expected += 1;
                }
            }
        }
        prop_assert_eq!(found.len(), expected);
    }
}

#[test]
fn eleven_gf_text_round_trips() {
    for label in pte_core::identities::LABELS {
        let gf = pte_core::identities::sequence_gf(label).unwrap();
        let reparsed: RationalGF = gf.to_string().parse().unwrap();
        assert_eq!(reparsed, gf, "label {label}");
    }
    for gf in pte_core::identities::ramanujan_gfs() {
        let reparsed: RationalGF = gf.to_string().parse().unwrap();
        assert_eq!(reparsed, gf);
    }
}

#[test]
fn streaming_and_batch_expansion_agree() {
    for label in pte_core::identities::LABELS {
        let gf = pte_core::identities::sequence_gf(label).unwrap();
        let streamed: Vec<BigRational> = cfinite::series(&gf).take(40).collect();
        let batch = expand_rational(&gf, 40);
        assert_eq!(streamed, batch, "label {label}");
    }
}
