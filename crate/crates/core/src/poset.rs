//! Finite posets, Möbius functions, Möbius inversion, linear extensions and
//! the descent statistics Des/maj/Asc/amaj.
//!
//! Elements are indexed `0..n` internally; the text format and all displayed
//! labels are 1-based. A labeling is *natural* when `i <= j` whenever element
//! `i` is below element `j`; linear extensions require it.

use crate::algebra::Rational;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeSet, HashMap};

/// A finite partial order on `{0, .., n-1}`, stored as its full
/// reflexive-transitive incidence matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// Row-major `n x n`: `leq[i*n + j]` iff element `i` is below `j`.
    leq: Vec<bool>,
    natural: bool,
}

impl Poset {
    /// Builds the poset generated by `relations` (0-based pairs `(i, j)`
    /// meaning `i` below `j`). Takes the reflexive-transitive closure and
    /// rejects relations whose closure violates antisymmetry.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Poset> {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(i, j) in relations {
            if i >= n || j >= n {
                return Err(Error::NotAPartialOrder(format!(
                    "relation ({}, {}) out of range for {} elements",
                    i + 1,
                    j + 1,
                    n
                )));
            }
            leq[i * n + j] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::NotAPartialOrder(format!(
                        "antisymmetry fails: {} and {} are mutually comparable",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Poset::from_closed_matrix(n, leq))
    }

    /// Wraps an already reflexive-transitively closed antisymmetric matrix.
    fn from_closed_matrix(n: usize, leq: Vec<bool>) -> Poset {
        let natural = (0..n).all(|i| (0..n).all(|j| !leq[i * n + j] || i <= j));
        Poset { n, leq, natural }
    }

    /// The chain `0 < 1 < ... < d-1`.
    pub fn chain(d: usize) -> Poset {
        let rels: Vec<(usize, usize)> = (1..d).map(|i| (i - 1, i)).collect();
        Poset::from_relations(d, &rels).expect("chain is a poset")
    }

    /// The antichain on `d` elements.
    pub fn antichain(d: usize) -> Poset {
        Poset::from_relations(d, &[]).expect("antichain is a poset")
    }

    /// Subsets of `{1..k}` ordered by inclusion (`2^k` elements).
    pub fn boolean_lattice(k: usize) -> Poset {
        let n = 1usize << k;
        let mut rels = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && a & b == a {
                    rels.push((a, b));
                }
            }
        }
        Poset::from_relations(n, &rels).expect("boolean lattice is a poset")
    }

    /// Parses the text format: first line `n`, then one line `j k` per
    /// relation meaning element `j` is below `k` (1-based). `#` starts a
    /// comment.
    pub fn parse(text: &str) -> Result<Poset> {
        let mut n: Option<usize> = None;
        let mut relations = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if n.is_none() {
                n = Some(line.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("expected element count, got {line:?}"),
                })?);
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected `j k`, got {line:?}"),
                });
            };
            let parse_label = |s: &str| -> Result<usize> {
                let v: usize = s.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad element label {s:?}"),
                })?;
                if v == 0 || v > n.unwrap() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("label {v} out of range 1..={}", n.unwrap()),
                    });
                }
                Ok(v - 1)
            };
            relations.push((parse_label(a)?, parse_label(b)?));
        }
        let n = n.ok_or(Error::Parse {
            line: 0,
            msg: "missing element count".into(),
        })?;
        Poset::from_relations(n, &relations)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.n + j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.le(i, j) || self.le(j, i)
    }

    /// Whether `i <= j` holds for every relation `i` below `j`.
    pub fn is_natural(&self) -> bool {
        self.natural
    }

    /// Cover relations `(i, j)`: `i < j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.lt(i, j) && !(0..self.n).any(|z| self.lt(i, z) && self.lt(z, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// A linear order of `0..n` compatible with the poset (smallest label
    /// first among available elements).
    pub fn topological_order(&self) -> Vec<usize> {
        let mut placed = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        while order.len() < self.n {
            let next = (0..self.n)
                .find(|&i| !placed[i] && (0..self.n).all(|j| placed[j] || !self.lt(j, i)))
                .expect("a finite poset always has a minimal element");
            placed[next] = true;
            order.push(next);
        }
        order
    }

    /// Relabels so the result is naturally labeled (topological sort, ties by
    /// original label). Returns the new poset and the map `old -> new`.
    pub fn relabel_natural(&self) -> (Poset, Vec<usize>) {
        let order = self.topological_order();
        let mut old_to_new = vec![0usize; self.n];
        for (new, &old) in order.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut leq = vec![false; self.n * self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                if self.le(i, j) {
                    leq[old_to_new[i] * self.n + old_to_new[j]] = true;
                }
            }
        }
        (Poset::from_closed_matrix(self.n, leq), old_to_new)
    }

    /// All linear extensions as permutations in one-line notation, in
    /// lexicographic order. The permutation `s` lists element labels bottom
    /// to top: `s(1)` is the smallest chain element. Requires a natural
    /// labeling.
    pub fn linear_extensions(&self) -> Result<Vec<Permutation>> {
        if !self.natural {
            return Err(Error::NotNaturallyLabeled);
        }
        let mut out = Vec::new();
        let mut placed = vec![false; self.n];
        let mut current = Vec::with_capacity(self.n);
        self.extend_backtrack(&mut placed, &mut current, &mut out);
        Ok(out)
    }

    fn extend_backtrack(
        &self,
        placed: &mut Vec<bool>,
        current: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        if current.len() == self.n {
            out.push(Permutation::new(current.iter().map(|&i| i + 1).collect()).unwrap());
            return;
        }
        for i in 0..self.n {
            if placed[i] {
                continue;
            }
            if (0..self.n).any(|j| self.lt(j, i) && !placed[j]) {
                continue;
            }
            placed[i] = true;
            current.push(i);
            self.extend_backtrack(placed, current, out);
            current.pop();
            placed[i] = false;
        }
    }

    /// Möbius function on all comparable pairs, by memoized top-down
    /// recursion: `mu(x,x) = 1` and `mu(x,y) = -sum_{x <= z < y} mu(x,z)`.
    pub fn mobius(&self) -> MobiusTable {
        let order = self.topological_order();
        let mut values = HashMap::new();
        for &x in &order {
            for &y in &order {
                if !self.le(x, y) {
                    continue;
                }
                let mu = if x == y {
                    BigInt::one()
                } else {
                    let mut acc = BigInt::zero();
                    for &z in &order {
                        if self.le(x, z) && self.lt(z, y) {
                            acc += values
                                .get(&(x, z))
                                .expect("processed in topological order");
                        }
                    }
                    -acc
                };
                values.insert((x, y), mu);
            }
        }
        MobiusTable { values }
    }

    /// Self-test of Möbius inversion: given `f`, defines
    /// `g(x) = sum_{y >= x} mu(x,y) f(y)` and checks that
    /// `f(x) = sum_{y >= x} g(y)` for every `x`.
    pub fn mobius_inversion_check(&self, f: &[Rational]) -> bool {
        assert_eq!(f.len(), self.n);
        let table = self.mobius();
        let g: Vec<Rational> = (0..self.n)
            .map(|x| {
                (0..self.n)
                    .filter(|&y| self.le(x, y))
                    .map(|y| Rational::from_integer(table.mu(x, y)) * &f[y])
                    .sum()
            })
            .collect();
        (0..self.n).all(|x| {
            let total: Rational = (0..self.n)
                .filter(|&y| self.le(x, y))
                .map(|y| g[y].clone())
                .sum();
            total == f[x]
        })
    }
}

/// Möbius values `mu(x, y)` for comparable pairs; incomparable pairs are 0.
#[derive(Clone, Debug)]
pub struct MobiusTable {
    values: HashMap<(usize, usize), BigInt>,
}

impl MobiusTable {
    pub fn mu(&self, x: usize, y: usize) -> BigInt {
        self.values.get(&(x, y)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.values.iter()
    }
}

/// A permutation of `{1, .., d}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<usize>,
}

/// Descent and ascent statistics of a permutation. `des` and `asc`
/// partition the positions `1..d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentStats {
    pub des: BTreeSet<usize>,
    pub maj: usize,
    pub asc: BTreeSet<usize>,
    pub amaj: usize,
}

impl Permutation {
    /// One-line notation with values `1..=d`, each exactly once.
    pub fn new(values: Vec<usize>) -> Result<Permutation> {
        let d = values.len();
        let mut seen = vec![false; d];
        for &v in &values {
            if v == 0 || v > d || seen[v - 1] {
                return Err(Error::Precondition(format!(
                    "not a permutation of 1..={d}: {values:?}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `sigma(pos)` for 1-based `pos`.
    pub fn value_at(&self, pos: usize) -> usize {
        self.values[pos - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Des, maj, Asc, amaj: descents are positions `j` with
    /// `sigma(j) > sigma(j+1)`; maj sums them; ascents are the complement.
    pub fn descent_stats(&self) -> DescentStats {
        let d = self.values.len();
        let mut des = BTreeSet::new();
        let mut asc = BTreeSet::new();
        for j in 1..d {
            if self.values[j - 1] > self.values[j] {
                des.insert(j);
            } else {
                asc.insert(j);
            }
        }
        let maj = des.iter().sum();
        let amaj = asc.iter().sum();
        DescentStats {
            des,
            maj,
            asc,
            amaj,
        }
    }

    pub fn maj(&self) -> usize {
        self.descent_stats().maj
    }

    pub fn amaj(&self) -> usize {
        self.descent_stats().amaj
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 && self.values.len() > 9 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// The three-element fork: 1 and 2 both below 3 (naturally labeled).
pub fn fork_poset() -> Poset {
    Poset::from_relations(3, &[(0, 2), (1, 2)]).expect("fork is a poset")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn perm(vals: &[usize]) -> Permutation {
        Permutation::new(vals.to_vec()).unwrap()
    }

    #[test]
    fn chain_mobius_alternates() {
        let p = Poset::chain(3);
        let m = p.mobius();
        assert_eq!(m.mu(0, 0), BigInt::from(1));
        assert_eq!(m.mu(0, 1), BigInt::from(-1));
        assert_eq!(m.mu(0, 2), BigInt::from(0));
        // incomparable/reversed pairs are zero
        assert_eq!(m.mu(2, 0), BigInt::from(0));
    }

    #[test]
    fn boolean_lattice_mobius_is_signed_by_rank() {
        // Direct recursion on subsets of {1,2}: mu(bottom, top) = (-1)^2 = 1.
        let p = Poset::boolean_lattice(2);
        let m = p.mobius();
        assert_eq!(m.mu(0, 3), BigInt::from(1));
        assert_eq!(m.mu(0, 1), BigInt::from(-1));
        assert_eq!(m.mu(0, 2), BigInt::from(-1));
    }

    #[test]
    fn mobius_recursion_column_sums_vanish() {
        for p in [Poset::chain(4), Poset::boolean_lattice(3), fork_poset()] {
            let m = p.mobius();
            for x in 0..p.len() {
                for y in 0..p.len() {
                    if p.lt(x, y) {
                        let sum: BigInt = (0..p.len())
                            .filter(|&z| p.le(x, z) && p.le(z, y))
                            .map(|z| m.mu(x, z))
                            .sum();
                        assert_eq!(sum, BigInt::from(0), "x={x} y={y}");
                    }
                }
            }
        }
    }

    #[test]
    fn inversion_on_one_element_poset() {
        let p = Poset::antichain(1);
        assert!(p.mobius_inversion_check(&[rat(5, 3)]));
    }

    #[test]
    fn inversion_on_fork_and_boolean_lattice() {
        // Fixed pseudo-random integer values; the check itself is the
        // double-sum identity.
        let p = fork_poset();
        assert!(p.mobius_inversion_check(&[rat(3, 1), rat(-7, 1), rat(2, 1)]));
        let b = Poset::boolean_lattice(3);
        let f: Vec<Rational> = (0..8).map(|i| rat((i * i * 13 % 23) as i64 - 11, 1)).collect();
        assert!(b.mobius_inversion_check(&f));
    }

    #[test]
    fn fork_linear_extensions_match_relabeled_example() {
        // The fork with top element relabeled last has exactly the
        // extensions [123] and [213].
        let p = fork_poset();
        let exts = p.linear_extensions().unwrap();
        assert_eq!(exts, vec![perm(&[1, 2, 3]), perm(&[2, 1, 3])]);
    }

    #[test]
    fn antichain_has_all_permutations_and_chain_only_identity() {
        assert_eq!(Poset::antichain(3).linear_extensions().unwrap().len(), 6);
        let chain_exts = Poset::chain(5).linear_extensions().unwrap();
        assert_eq!(chain_exts, vec![perm(&[1, 2, 3, 4, 5])]);
    }

    #[test]
    fn non_natural_labeling_is_rejected_and_relabeled() {
        // 3 below 1: not natural.
        let p = Poset::from_relations(3, &[(2, 0)]).unwrap();
        assert!(!p.is_natural());
        assert!(matches!(
            p.linear_extensions(),
            Err(Error::NotNaturallyLabeled)
        ));
        let (q, map) = p.relabel_natural();
        assert!(q.is_natural());
        // old element 2 (below old 0) must come first now
        assert!(map[2] < map[0]);
        assert_eq!(q.linear_extensions().unwrap().len(), 3);
    }

    #[test]
    fn descent_stats_examples() {
        let s = perm(&[2, 1, 3]).descent_stats();
        assert_eq!(s.des, BTreeSet::from([1]));
        assert_eq!(s.maj, 1);
        assert_eq!(s.asc, BTreeSet::from([2]));
        assert_eq!(s.amaj, 2);

        let id = perm(&[1, 2, 3]).descent_stats();
        assert!(id.des.is_empty());
        assert_eq!(id.maj, 0);

        let rev = perm(&[3, 2, 1]).descent_stats();
        assert_eq!(rev.maj, 3);
        assert_eq!(rev.amaj, 0);
    }

    #[test]
    fn maj_plus_amaj_is_binom_d_2_exhaustively() {
        // Exhaustive over all permutations of d <= 7 via linear extensions of
        // the antichain.
        for d in 1..=7usize {
            let binom = d * (d - 1) / 2;
            for s in Poset::antichain(d).linear_extensions().unwrap() {
                let st = s.descent_stats();
                assert_eq!(st.maj + st.amaj, binom);
                let union: BTreeSet<usize> = st.des.union(&st.asc).copied().collect();
                assert_eq!(union, (1..d).collect::<BTreeSet<_>>());
                assert!(st.des.is_disjoint(&st.asc));
            }
        }
    }

    #[test]
    fn parse_poset_text() {
        let text = "3\n# fork with top 3\n1 3\n2 3\n";
        let p = Poset::parse(text).unwrap();
        assert_eq!(p, fork_poset());
        assert!(Poset::parse("2\n1 2\n2 1\n").is_err());
        assert!(Poset::parse("abc\n").is_err());
    }

    #[test]
    fn covers_of_chain() {
        assert_eq!(Poset::chain(3).covers(), vec![(0, 1), (1, 2)]);
        // transitive relation input yields the same covers
        let p = Poset::from_relations(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
    }
}
