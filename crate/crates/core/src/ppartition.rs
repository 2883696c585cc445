//! Weak and strict P-partitions: order-reversing maps from a poset to the
//! nonnegative integers, their generating functions by linear-extension
//! descent statistics, the half-open chain-cell decomposition of the order
//! cone, and the reciprocity identity tying the weak and strict series.

use crate::algebra::{Polynomial, Rational, RationalGF};
use crate::error::Result;
use crate::poset::{DescentStats, Permutation, Poset};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A counting problem: (strict) order-reversing maps from a naturally
/// labeled poset. Non-natural input is relabeled on construction and the
/// `old -> new` map is kept so results can be carried back.
#[derive(Clone, Debug)]
pub struct PPartitionSpec {
    poset: Poset,
    strict: bool,
    relabeling: Option<Vec<usize>>,
}

impl PPartitionSpec {
    pub fn new(poset: Poset, strict: bool) -> PPartitionSpec {
        if poset.is_natural() {
            PPartitionSpec {
                poset,
                strict,
                relabeling: None,
            }
        } else {
            let (relabeled, map) = poset.relabel_natural();
            PPartitionSpec {
                poset: relabeled,
                strict,
                relabeling: Some(map),
            }
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn strict(&self) -> bool {
        self.strict
    }

    /// `old -> new` element map when the input had to be relabeled.
    pub fn relabeling(&self) -> Option<&[usize]> {
        self.relabeling.as_deref()
    }

    fn admits(&self, x: &[u32]) -> bool {
        let d = self.poset.len();
        for i in 0..d {
            for j in 0..d {
                if i != j && self.poset.le(i, j) {
                    // order-reversing: below means a weakly (strictly) larger part
                    if self.strict {
                        if x[i] <= x[j] {
                            return false;
                        }
                    } else if x[i] < x[j] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Exhaustive count of (strict) order-reversing maps with part sum `t`.
pub fn ppartition_count(spec: &PPartitionSpec, t: u32) -> BigInt {
    let d = spec.poset().len();
    if d == 0 {
        return if t == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let mut count = BigInt::zero();
    let mut parts = vec![0u32; d];
    compositions_of(t, 0, &mut parts, &mut |x| {
        if spec.admits(x) {
            count += 1;
        }
    });
    count
}

fn compositions_of(remaining: u32, idx: usize, parts: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if idx + 1 == parts.len() {
        parts[idx] = remaining;
        f(parts);
        return;
    }
    for v in 0..=remaining {
        parts[idx] = v;
        compositions_of(remaining - v, idx + 1, parts, f);
    }
}

/// The generating function `sum over partitions of z^(part sum)`: numerator
/// `sum over linear extensions of z^maj` (weak) or `z^amaj` (strict), over
/// the denominator `(1-z)(1-z^2)..(1-z^d)`.
pub fn ppartition_gf(spec: &PPartitionSpec) -> RationalGF {
    let d = spec.poset().len();
    let extensions = spec
        .poset()
        .linear_extensions()
        .expect("spec posets are naturally labeled");
    let mut numerator = Polynomial::zero();
    for sigma in &extensions {
        let stats = sigma.descent_stats();
        let exponent = if spec.strict() { stats.amaj } else { stats.maj };
        numerator = &numerator + &Polynomial::monomial(Rational::one(), exponent);
    }
    RationalGF::new(numerator, (1..=d as u32).collect())
}

/// One half-open cell of the order-cone decomposition: the chain
/// `x_(s(1)) >= x_(s(2)) >= ..` with strict steps exactly at the descents
/// of the permutation.
#[derive(Clone, Debug)]
pub struct HalfOpenChainCell {
    sigma: Permutation,
    stats: DescentStats,
}

impl HalfOpenChainCell {
    pub fn new(sigma: Permutation) -> HalfOpenChainCell {
        let stats = sigma.descent_stats();
        HalfOpenChainCell { sigma, stats }
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn stats(&self) -> &DescentStats {
        &self.stats
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        let d = self.sigma.len();
        for pos in 1..d {
            let a = x[self.sigma.value_at(pos) - 1];
            let b = x[self.sigma.value_at(pos + 1) - 1];
            if self.stats.des.contains(&pos) {
                if a <= b {
                    return false;
                }
            } else if a < b {
                return false;
            }
        }
        true
    }

    /// `z^maj / ((1-z)(1-z^2)..(1-z^d))`.
    pub fn gf(&self) -> RationalGF {
        let d = self.sigma.len();
        RationalGF::new(
            Polynomial::monomial(Rational::one(), self.stats.maj),
            (1..=d as u32).collect(),
        )
    }
}

/// Checks that the half-open chain cells of the linear extensions partition
/// the set of weak partitions: every order-reversing map with part sum at
/// most `t_max` lies in exactly one cell.
pub fn cell_decomposition_check(spec: &PPartitionSpec, t_max: u32) -> bool {
    let weak = PPartitionSpec {
        poset: spec.poset().clone(),
        strict: false,
        relabeling: None,
    };
    let cells: Vec<HalfOpenChainCell> = spec
        .poset()
        .linear_extensions()
        .expect("spec posets are naturally labeled")
        .into_iter()
        .map(HalfOpenChainCell::new)
        .collect();
    let d = spec.poset().len();
    if d == 0 {
        return true;
    }
    let mut ok = true;
    let mut parts = vec![0u32; d];
    for t in 0..=t_max {
        compositions_of(t, 0, &mut parts, &mut |x| {
            if weak.admits(x) {
                let hits = cells.iter().filter(|c| c.contains(x)).count();
                if hits != 1 {
                    ok = false;
                }
            }
        });
        if !ok {
            return false;
        }
    }
    ok
}

/// Stanley reciprocity for the weak and strict series: substituting `1/z`
/// into the weak generating function equals `(-z)^d` times the strict one.
/// Verified along two routes: the rational-function identity, and the
/// complementation `maj + amaj = binom(d, 2)` with `Asc` the complement of
/// `Des` for every linear extension.
pub fn stanley_reciprocity_check(poset: &Poset) -> Result<bool> {
    let weak_spec = PPartitionSpec::new(poset.clone(), false);
    let strict_spec = PPartitionSpec::new(poset.clone(), true);
    let d = poset.len();
    let weak = ppartition_gf(&weak_spec);
    let strict = ppartition_gf(&strict_spec);
    let sign = if d.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    };
    let twisted_strict = strict.scaled_by_monomial(&sign, d);
    let functional = weak.reciprocal()?.equivalent(&twisted_strict);

    let binom = d * (d.max(1) - 1) / 2;
    let complementation = weak_spec
        .poset()
        .linear_extensions()?
        .iter()
        .all(|sigma| {
            let stats = sigma.descent_stats();
            stats.maj + stats.amaj == binom
                && stats.des.is_disjoint(&stats.asc)
                && stats.des.len() + stats.asc.len() == d.max(1) - 1
        });
    Ok(functional && complementation)
}

/// Per-extension statistics table: (permutation, Des, maj, Asc, amaj).
pub fn extension_stats(poset: &Poset) -> Result<Vec<(Permutation, DescentStats)>> {
    Ok(poset
        .linear_extensions()?
        .into_iter()
        .map(|sigma| {
            let stats = sigma.descent_stats();
            (sigma, stats)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::fork_poset;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn gf(num: &[i64], den: &[u32]) -> RationalGF {
        RationalGF::new(Polynomial::from_int_coeffs(num), den.to_vec())
    }

    #[test]
    fn chain_partitions_of_three() {
        // partitions of 3 into at most 2 parts: 3+0 and 2+1
        let spec = PPartitionSpec::new(Poset::chain(2), false);
        assert_eq!(ppartition_count(&spec, 3), big(2));
    }

    #[test]
    fn antichain_counts_compositions() {
        let spec = PPartitionSpec::new(Poset::antichain(2), false);
        assert_eq!(ppartition_count(&spec, 3), big(4));
    }

    #[test]
    fn strict_fork_count_matches_series() {
        // strict partitions of 2 on the fork: only (1,1,0)
        let spec = PPartitionSpec::new(fork_poset(), true);
        assert_eq!(ppartition_count(&spec, 2), big(1));
        let series = gf(&[0, 0, 1], &[1, 1, 3]).series_prefix(2);
        assert_eq!(series[2], big(1));
    }

    #[test]
    fn chain_generating_functions() {
        for d in 1..=4usize {
            let weak = ppartition_gf(&PPartitionSpec::new(Poset::chain(d), false));
            assert!(weak.equivalent(&RationalGF::new(
                Polynomial::one(),
                (1..=d as u32).collect()
            )));
            let strict = ppartition_gf(&PPartitionSpec::new(Poset::chain(d), true));
            let binom = d * (d - 1) / 2;
            assert!(strict.equivalent(&RationalGF::new(
                Polynomial::monomial(Rational::one(), binom),
                (1..=d as u32).collect()
            )));
        }
    }

    #[test]
    fn antichain_generating_functions() {
        // weak: (1 + z)/((1-z)(1-z^2)) is 1/(1-z)^2, and strict coincides
        let weak = ppartition_gf(&PPartitionSpec::new(Poset::antichain(2), false));
        assert!(weak.equivalent(&gf(&[1], &[1, 1])));
        let strict = ppartition_gf(&PPartitionSpec::new(Poset::antichain(2), true));
        assert!(strict.equivalent(&gf(&[1], &[1, 1])));
    }

    #[test]
    fn fork_generating_functions() {
        let weak = ppartition_gf(&PPartitionSpec::new(fork_poset(), false));
        assert!(weak.equivalent(&gf(&[1], &[1, 1, 3])));
        let strict = ppartition_gf(&PPartitionSpec::new(fork_poset(), true));
        assert!(strict.equivalent(&gf(&[0, 0, 1], &[1, 1, 3])));
    }

    #[test]
    fn series_prefix_matches_brute_force() {
        for poset in [Poset::chain(3), Poset::antichain(3), fork_poset()] {
            for strict in [false, true] {
                let spec = PPartitionSpec::new(poset.clone(), strict);
                let series = ppartition_gf(&spec).series_prefix(12);
                for t in 0..=12u32 {
                    assert_eq!(
                        series[t as usize],
                        ppartition_count(&spec, t),
                        "strict={strict} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn cell_gf_examples() {
        let d3 = |vals: &[usize]| HalfOpenChainCell::new(Permutation::new(vals.to_vec()).unwrap());
        assert_eq!(d3(&[1, 2, 3]).gf(), gf(&[1], &[1, 2, 3]));
        assert_eq!(d3(&[2, 1, 3]).gf(), gf(&[0, 1], &[1, 2, 3]));
        assert_eq!(d3(&[3, 2, 1]).gf(), gf(&[0, 0, 0, 1], &[1, 2, 3]));
    }

    #[test]
    fn cell_gf_matches_brute_enumeration() {
        // enumerate the half-open chain cell directly up to t = 10
        let cell = HalfOpenChainCell::new(Permutation::new(vec![2, 1, 3]).unwrap());
        let series = cell.gf().series_prefix(10);
        for t in 0..=10u32 {
            let mut count = 0u32;
            let mut parts = vec![0u32; 3];
            compositions_of(t, 0, &mut parts, &mut |x| {
                if cell.contains(x) {
                    count += 1;
                }
            });
            assert_eq!(BigInt::from(count), series[t as usize], "t={t}");
        }
    }

    #[test]
    fn cell_decomposition_is_a_partition() {
        assert!(cell_decomposition_check(
            &PPartitionSpec::new(fork_poset(), false),
            6
        ));
        assert!(cell_decomposition_check(
            &PPartitionSpec::new(Poset::chain(4), false),
            8
        ));
        assert!(cell_decomposition_check(
            &PPartitionSpec::new(Poset::antichain(3), false),
            5
        ));
    }

    #[test]
    fn stanley_reciprocity_on_named_posets() {
        assert!(stanley_reciprocity_check(&Poset::chain(3)).unwrap());
        assert!(stanley_reciprocity_check(&Poset::antichain(3)).unwrap());
        assert!(stanley_reciprocity_check(&fork_poset()).unwrap());
    }

    #[test]
    fn chain_reciprocity_numerator_is_z_cubed() {
        let weak = ppartition_gf(&PPartitionSpec::new(Poset::chain(3), false));
        let reciprocal = weak.reciprocal().unwrap();
        // 1/((1-z)(1-z^2)(1-z^3)) maps to -z^6/(same): equivalently the
        // strict gf z^3/(same) times (-z)^3
        let strict = ppartition_gf(&PPartitionSpec::new(Poset::chain(3), true));
        let twisted = strict.scaled_by_monomial(&Rational::from_integer(big(-1)), 3);
        assert!(reciprocal.equivalent(&twisted));
    }

    #[test]
    fn extension_count_is_numerator_at_one() {
        for poset in [Poset::chain(4), Poset::antichain(4), fork_poset()] {
            let expected = poset.linear_extensions().unwrap().len();
            let weak = ppartition_gf(&PPartitionSpec::new(poset, false));
            let at_one: Rational = weak.numerator().coeffs().iter().sum();
            assert_eq!(at_one, Rational::from_integer(big(expected as i64)));
        }
    }

    #[test]
    fn non_natural_input_is_relabeled() {
        // top element labeled 1: not natural
        let p = Poset::from_relations(3, &[(1, 0), (2, 0)]).unwrap();
        let spec = PPartitionSpec::new(p, false);
        assert!(spec.poset().is_natural());
        assert!(spec.relabeling().is_some());
        // counts agree with the fork poset
        let fork = PPartitionSpec::new(fork_poset(), false);
        for t in 0..=6u32 {
            assert_eq!(ppartition_count(&spec, t), ppartition_count(&fork, t));
        }
    }

    #[test]
    fn one_element_poset_gf() {
        let spec = PPartitionSpec::new(Poset::chain(1), false);
        let weak = ppartition_gf(&spec);
        assert_eq!(weak, gf(&[1], &[1]));
        let strict = ppartition_gf(&PPartitionSpec::new(Poset::chain(1), true));
        assert_eq!(strict, gf(&[1], &[1]));
    }
}
