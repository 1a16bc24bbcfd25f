mod common;

use std::cmp::Ordering;
use std::collections::HashSet;

use lineword::{derive, s_m_word, CuttingLine, RauzyGraph, Surd, Word};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn surd_in(d: u64) -> impl Strategy<Value = Surd> {
    (-20i64..20, -20i64..20, 1i64..12).prop_map(move |(p, q, r)| Surd::new(p, q, r, d).unwrap())
}

fn positive_surd() -> impl Strategy<Value = Surd> {
    prop_oneof![Just(2u64), Just(3), Just(5), Just(7)].prop_flat_map(|d| {
        (0i64..12, 0i64..6, 1i64..6)
            .prop_filter("positive", |(p, q, _)| p + q > 0)
            .prop_map(move |(p, q, r)| Surd::new(p, q, r, d).unwrap())
    })
}

/// Sign of `(p + q√d)/r` from a 60-digit truncation of `√d`.
fn decimal_sign(x: &Surd) -> Ordering {
    let scale = BigInt::from(10).pow(60);
    let root = (BigInt::from(x.radicand()) * &scale * &scale).sqrt();
    let approx = x.p() * &scale + x.q() * &root;
    let sign = approx.sign();
    // truncation error is below |q|, far smaller than any nonzero value here
    assert!(approx.is_zero() || approx.abs() > x.q().abs());
    let s = match sign {
        num_bigint::Sign::Minus => Ordering::Less,
        num_bigint::Sign::NoSign => Ordering::Equal,
        num_bigint::Sign::Plus => Ordering::Greater,
    };
    if x.r().is_negative() {
        s.reverse()
    } else {
        s
    }
}

fn naive_complexity(w: &Word, n: usize) -> usize {
    let s = w.to_string();
    (0..=s.len() - n)
        .map(|i| &s[i..i + n])
        .collect::<HashSet<_>>()
        .len()
}

fn contains(haystack: &[u8], needle: &[u8]) -> bool {
    haystack.windows(needle.len()).any(|w| w == needle)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn comparison_matches_decimal_oracle((x, y) in prop_oneof![Just(2u64), Just(3), Just(5)]
                                             .prop_flat_map(|d| (surd_in(d), surd_in(d)))) {
        prop_assert_eq!(x.try_cmp(&y).unwrap(), decimal_sign(&x.sub(&y).unwrap()));
    }

    #[test]
    fn ordering_is_consistent(x in surd_in(5), y in surd_in(5)) {
        let diff = x.sub(&y).unwrap();
        prop_assert_eq!(x.try_cmp(&y).unwrap(), decimal_sign(&diff));
        prop_assert_eq!(y.try_cmp(&x).unwrap(), decimal_sign(&diff).reverse());
    }

    #[test]
    fn floor_brackets_value(x in surd_in(3)) {
        let f = Surd::integer(x.floor());
        prop_assert!(f.try_cmp(&x).unwrap() != Ordering::Greater);
        prop_assert_eq!(x.try_cmp(&f.add(&Surd::one()).unwrap()).unwrap(), Ordering::Less);
    }

    #[test]
    fn reciprocal_is_an_involution(x in surd_in(2).prop_filter("nonzero", |x| !x.is_zero())) {
        prop_assert_eq!(x.recip().unwrap().recip().unwrap(), x.clone());
        prop_assert_eq!(x.mul(&x.recip().unwrap()).unwrap(), Surd::one());
    }

    #[test]
    fn literal_round_trip(x in surd_in(7)) {
        prop_assert_eq!(x.to_string().parse::<Surd>().unwrap(), x);
    }

    #[test]
    fn complexity_matches_naive(symbols in proptest::collection::vec(0u8..3, 1..120), n in 1usize..8) {
        let w = Word::ternary(symbols).unwrap();
        prop_assume!(n <= w.len());
        prop_assert_eq!(w.complexity(n).unwrap(), naive_complexity(&w, n));
    }

    #[test]
    fn projection_commutes_with_prefix(line_seed in 0u64..1000, n in 1usize..300, letter in 0u8..3) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(line_seed);
        let w = common::random_line(&mut rng).generate(300);
        let (whole, _) = w.removal_projection(letter).unwrap();
        let (part, _) = w.prefix(n).removal_projection(letter).unwrap();
        prop_assert_eq!(part.symbols(), &whole.symbols()[..part.len()]);
    }

    #[test]
    fn cutting_frequencies_are_bounded(lambda in positive_surd()) {
        let w = CuttingLine::new(lambda.clone()).unwrap().generate(1500);
        let (zeros, ones) = (w.count(0) as f64, w.count(1) as f64);
        prop_assume!(ones > 0.0);
        let l = lambda.to_f64();
        prop_assert!((zeros / ones - l).abs() <= l.max(2.0) / ones);
    }

    #[test]
    fn derivation_lands_in_the_reduced_slope(lambda in positive_surd()) {
        prop_assume!(!lambda.is_rational());
        let w = CuttingLine::new(lambda.clone()).unwrap().generate(1500);
        let d = derive(&w).unwrap();
        // slope seen after exchanging letters is 1/λ
        let oriented = if d.swapped { lambda.recip().unwrap() } else { lambda };
        let reduced = oriented.sub(&Surd::integer(d.value)).unwrap();
        let target = CuttingLine::new(reduced).unwrap().generate(4 * w.len());
        prop_assert!(contains(target.symbols(), d.derived.symbols()));
    }

    #[test]
    fn rauzy_counts_match_complexity(n in 1usize..12) {
        let w = s_m_word(3000);
        let g = RauzyGraph::build(&w, n).unwrap();
        prop_assert_eq!(g.vertices().len(), w.complexity(n).unwrap());
        prop_assert_eq!(g.edges().len(), w.complexity(n + 1).unwrap());
        prop_assert_eq!(g.degree_profile().out_degrees.iter().sum::<usize>(), g.edges().len());
    }
}
