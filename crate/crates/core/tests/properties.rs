use num_bigint::BigInt;
use proptest::prelude::*;

use hexpress::hn::{codim, enumerate_with_codim, validate};
use hexpress::moduli::{dim_complex, hodge_biseries, hodge_t1, q_complex, q_real};
use hexpress::series::{BiSeries, EvalPoint, Specialization, UniSeries};

const CAP: usize = 12;

fn coeff() -> impl Strategy<Value = BigInt> {
    prop_oneof![
        4 => (-50i64..50).prop_map(BigInt::from),
        1 => (any::<i64>(), 0u32..80).prop_map(|(c, s)| BigInt::from(c) << s),
    ]
}

fn uni() -> impl Strategy<Value = UniSeries> {
    prop::collection::vec(coeff(), CAP + 1).prop_map(UniSeries::from_vec)
}

fn bi() -> impl Strategy<Value = BiSeries> {
    prop::collection::vec((0..=CAP, 0..=CAP, coeff()), 0..20).prop_map(|terms| {
        let terms: Vec<_> = terms.into_iter().filter(|(i, j, _)| i + j <= CAP).collect();
        let mut acc = BiSeries::zero(CAP);
        for (i, j, c) in terms {
            let mono = BiSeries::from_terms(&[(i, j, c)], CAP);
            acc = sum(&acc, &mono);
        }
        acc
    })
}

fn sum(a: &BiSeries, b: &BiSeries) -> BiSeries {
    let cap = a.cap().min(b.cap());
    let mut terms: Vec<(usize, usize, BigInt)> = Vec::new();
    for s in 0..=cap {
        for i in 0..=s {
            terms.push((i, s - i, a.coeff(i, s - i) + b.coeff(i, s - i)));
        }
    }
    BiSeries::from_terms(&terms, cap)
}

proptest! {
    #[test]
    fn uni_ring_laws(a in uni(), b in uni(), c in uni()) {
        let ab = a.mul(&b, CAP).unwrap();
        prop_assert_eq!(&ab, &b.mul(&a, CAP).unwrap());
        prop_assert_eq!(ab.mul(&c, CAP).unwrap(), a.mul(&b.mul(&c, CAP).unwrap(), CAP).unwrap());
        let lhs = a.mul(&(&b + &c), CAP).unwrap();
        prop_assert_eq!(lhs, &ab + &a.mul(&c, CAP).unwrap());
        prop_assert_eq!(a.mul(&UniSeries::one(CAP), CAP).unwrap(), a.clone());
    }

    #[test]
    fn uni_truncation_commutes_with_mul(a in uni(), b in uni(), k in 0..=CAP) {
        let full = a.mul(&b, CAP).unwrap().truncate(k).unwrap();
        let early = a.truncate(k).unwrap().mul(&b.truncate(k).unwrap(), k).unwrap();
        prop_assert_eq!(&full, &early);
        prop_assert_eq!(a.mul(&b, k).unwrap(), full);
    }

    #[test]
    fn uni_geom_round_trip(a in uni(), k in 1..5usize, m in -4i64..5) {
        let there = a.geom_factor(k, m, CAP).unwrap();
        prop_assert_eq!(there.geom_factor(k, -m, CAP).unwrap(), a);
    }

    #[test]
    fn uni_geom_matches_binomial(k in 1..4usize, e in 0..6u32) {
        let direct = UniSeries::one(CAP).geom_factor(k, e as i64, CAP).unwrap();
        let alternating = UniSeries::pow_binom(k, e, CAP);
        // (1 - t^k)^e is (1 + t^k)^e with odd powers of t^k negated
        for (i, (x, y)) in direct.coeffs().iter().zip(alternating.coeffs()).enumerate() {
            let odd = (i / k) % 2 == 1;
            prop_assert_eq!(x, &if odd { -y } else { y.clone() });
        }
    }

    #[test]
    fn bi_ring_laws(a in bi(), b in bi(), c in bi()) {
        let ab = a.mul(&b, CAP).unwrap();
        prop_assert_eq!(&ab, &b.mul(&a, CAP).unwrap());
        prop_assert_eq!(ab.mul(&c, CAP).unwrap(), a.mul(&b.mul(&c, CAP).unwrap(), CAP).unwrap());
        prop_assert_eq!(a.mul(&sum(&b, &c), CAP).unwrap(), sum(&ab, &a.mul(&c, CAP).unwrap()));
    }

    #[test]
    fn bi_truncation_commutes_with_mul(a in bi(), b in bi(), k in 0..=CAP) {
        let full = a.mul(&b, CAP).unwrap().truncate(k).unwrap();
        prop_assert_eq!(full, a.truncate(k).unwrap().mul(&b.truncate(k).unwrap(), k).unwrap());
    }

    #[test]
    fn bi_geom_round_trip(a in bi(), x in 0..3usize, y in 0..3usize, m in -3i64..4) {
        prop_assume!(x + y > 0);
        let there = a.geom_factor((x, y), m, CAP).unwrap();
        prop_assert_eq!(there.geom_factor((x, y), -m, CAP).unwrap(), a);
    }

    #[test]
    fn total_degree_specialization_is_a_ring_map(a in bi(), b in bi()) {
        let lhs = a.mul(&b, CAP).unwrap().specialize(Specialization::TT);
        let rhs = a
            .specialize(Specialization::TT)
            .mul(&b.specialize(Specialization::TT), CAP)
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in uni(), b in uni()) {
        // a polynomial of degree <= CAP/2 times another stays within the cap
        let a = a.truncate(CAP / 2).unwrap().with_cap(CAP);
        let b = b.truncate(CAP / 2).unwrap().with_cap(CAP);
        let ab = a.mul(&b, CAP).unwrap();
        for s in [EvalPoint::One, EvalPoint::MinusOne] {
            prop_assert_eq!(ab.eval_at(s), a.eval_at(s) * b.eval_at(s));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hn_types_are_valid_and_bounded(r in 1..5u32, d in -6..7i64, g in 1..4u32, cap in 0..25u64) {
        for (mu, c) in enumerate_with_codim(r, d, g, cap) {
            prop_assert!(validate(&mu, r, d), "{}", mu);
            prop_assert!(mu.len() >= 2);
            prop_assert_eq!(codim(&mu, g).unwrap(), c);
            prop_assert!(c <= cap);
            if g >= 2 {
                prop_assert!(c >= 1);
            }
        }
    }

    #[test]
    fn hn_enumeration_is_monotone_in_cap(r in 2..5u32, d in -6..7i64, g in 1..4u32, cap in 0..20u64) {
        let small = enumerate_with_codim(r, d, g, cap);
        let large = enumerate_with_codim(r, d, g, cap + 1);
        let filtered: Vec<_> = large.iter().filter(|(_, c)| *c <= cap).cloned().collect();
        prop_assert_eq!(small, filtered);
    }

    #[test]
    fn hn_enumeration_commutes_with_twist(r in 2..5u32, d in -6..7i64, g in 1..4u32, cap in 0..20u64) {
        let base: Vec<_> = enumerate_with_codim(r, d, g, cap)
            .into_iter()
            .map(|(mu, c)| (mu.twist(), c))
            .collect();
        let mut shifted = enumerate_with_codim(r, d + r as i64, g, cap);
        shifted.sort_by(|a, b| a.0.cmp(&b.0));
        let mut base = base;
        base.sort_by(|a, b| a.0.cmp(&b.0));
        prop_assert_eq!(base, shifted);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn recursion_outputs_are_nonnegative(g in 2..4u32, r in 1..4u32, d in -4..5i64, n_off in 0..4u32) {
        let n = 1 + n_off % (g + 1);
        let cap = 10;
        prop_assert!(q_complex(g, r, d, cap).unwrap().is_nonnegative());
        prop_assert!(hodge_t1(g, r, d, cap).unwrap().is_nonnegative());
        prop_assert!(q_real(g, n, r, d, cap).unwrap().is_nonnegative());
        let xy = hodge_biseries(g, r, d, cap).unwrap();
        prop_assert!(xy.is_nonnegative());
        prop_assert!(xy.is_swap_symmetric());
    }

    #[test]
    fn recursion_is_invariant_under_degree_shift(g in 2..4u32, r in 1..4u32, d in -4..5i64, n_off in 0..4u32) {
        let n = 1 + n_off % (g + 1);
        let cap = 9;
        let s = d + r as i64;
        prop_assert_eq!(q_complex(g, r, d, cap).unwrap(), q_complex(g, r, s, cap).unwrap());
        prop_assert_eq!(q_real(g, n, r, d, cap).unwrap(), q_real(g, n, r, s, cap).unwrap());
        prop_assert_eq!(hodge_biseries(g, r, d, cap).unwrap(), hodge_biseries(g, r, s, cap).unwrap());
    }

    #[test]
    fn recursion_is_invariant_under_duality(g in 2..4u32, r in 1..4u32, d in -4..5i64) {
        let cap = 9;
        prop_assert_eq!(q_complex(g, r, d, cap).unwrap(), q_complex(g, r, -d, cap).unwrap());
        prop_assert_eq!(hodge_t1(g, r, d, cap).unwrap(), hodge_t1(g, r, -d, cap).unwrap());
    }

    #[test]
    fn coprime_cells_are_palindromic(g in 2..4u32, r in 1..4u32, k in 0..3i64) {
        let d = 1 + k * r as i64;
        let n = dim_complex(g, r);
        let p = q_complex(g, r, d, 2 * n + 2).unwrap();
        prop_assert!(p.palindrome_check(2 * n));
    }
}
