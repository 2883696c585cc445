//! Property tests for the exact-algebra invariants: interpolation recovers
//! polynomials, the generating-function reciprocal is an involution, series
//! arithmetic matches coefficient arithmetic, descent statistics complement,
//! and Möbius recursion sums vanish.

use num_bigint::BigInt;
use proptest::prelude::*;
use reciprocity_core::algebra::{rat, Polynomial, Rational, RationalGF};
use reciprocity_core::poset::{Permutation, Poset};

fn small_polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-20i64..=20, 1i64..=4), 0..6).prop_map(|coeffs| {
        Polynomial::from_coeffs(coeffs.into_iter().map(|(p, q)| rat(p, q)).collect())
    })
}

fn small_gf() -> impl Strategy<Value = RationalGF> {
    (
        prop::collection::vec(1u32..=4, 1..4),
        prop::collection::vec(-5i64..=5, 1..5),
    )
        .prop_filter_map("numerator must fit under the exponent sum", |(den, num)| {
            let numerator = Polynomial::from_coeffs(
                num.into_iter().map(|c| rat(c, 1)).collect::<Vec<Rational>>(),
            );
            let total: u32 = den.iter().sum();
            match numerator.degree() {
                Some(d) if d > total as usize => None,
                _ => Some(RationalGF::new(numerator, den)),
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn interpolation_recovers_polynomials(p in small_polynomial()) {
        let nodes = p.coeffs().len().max(1);
        let points: Vec<(BigInt, Rational)> = (0..nodes as i64)
            .map(|x| (BigInt::from(x), p.eval_int(&BigInt::from(x))))
            .collect();
        let q = Polynomial::interpolate(&points).unwrap();
        prop_assert_eq!(p, q);
    }

    #[test]
    fn gf_reciprocal_is_involutive(g in small_gf()) {
        let twice = g.reciprocal().unwrap().reciprocal().unwrap();
        prop_assert_eq!(&twice, &g);
        prop_assert!(twice.equivalent(&g));
    }

    #[test]
    fn gf_sum_and_product_match_series(a in small_gf(), b in small_gf()) {
        let n = 20usize;
        let sa = a.series_prefix(n);
        let sb = b.series_prefix(n);
        let sum = a.add(&b).series_prefix(n);
        let prod = a.mul(&b).series_prefix(n);
        for i in 0..=n {
            prop_assert_eq!(&sum[i], &(&sa[i] + &sb[i]));
            let conv: BigInt = (0..=i).map(|j| &sa[j] * &sb[i - j]).sum();
            prop_assert_eq!(&prod[i], &conv);
        }
    }

    #[test]
    fn descents_and_ascents_complement(values in prop::collection::vec(0u8..8, 1..8)) {
        // turn arbitrary keys into a permutation by ranking
        let d = values.len();
        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by_key(|&i| (values[i], i));
        let mut one_line = vec![0usize; d];
        for (rank, &pos) in order.iter().enumerate() {
            one_line[pos] = rank + 1;
        }
        let sigma = Permutation::new(one_line).unwrap();
        let stats = sigma.descent_stats();
        prop_assert_eq!(stats.maj + stats.amaj, d * (d - 1) / 2);
        prop_assert!(stats.des.is_disjoint(&stats.asc));
        prop_assert_eq!(stats.des.len() + stats.asc.len(), d - 1);
    }

    #[test]
    fn mobius_sums_vanish_on_random_posets(
        d in 2usize..6,
        flags in prop::collection::vec(any::<bool>(), 15),
    ) {
        let mut relations = Vec::new();
        let mut k = 0;
        for i in 0..d {
            for j in i + 1..d {
                if flags[k % flags.len()] {
                    relations.push((i, j));
                }
                k += 1;
            }
        }
        let p = Poset::from_relations(d, &relations).unwrap();
        let table = p.mobius();
        for x in 0..d {
            for y in 0..d {
                if p.lt(x, y) {
                    let total: BigInt = (0..d)
                        .filter(|&z| p.le(x, z) && p.le(z, y))
                        .map(|z| table.mu(x, z))
                        .sum();
                    prop_assert_eq!(total, BigInt::from(0));
                }
            }
        }
    }

    #[test]
    fn linear_extension_count_bounds(d in 1usize..6) {
        // chains have one extension, antichains have d!
        let chain = Poset::chain(d).linear_extensions().unwrap();
        prop_assert_eq!(chain.len(), 1);
        let antichain = Poset::antichain(d).linear_extensions().unwrap();
        let factorial: usize = (1..=d).product();
        prop_assert_eq!(antichain.len(), factorial);
    }
}
