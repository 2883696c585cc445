//! Chromatic polynomials, acyclic orientations, compatible pairs, and
//! inside-out counting on the unit cube with the graphical arrangement.
//!
//! The geometric side realizes colorings as lattice points of cube dilates:
//! proper t-colorings are the interior points of the (t+1)-dilate off the
//! graphical arrangement, and the reciprocal count weights closed-cube points
//! by the number of closed regions containing them.

use crate::algebra::{Polynomial, Rational};
use crate::arrangement::{Arrangement, Hyperplane};
use crate::error::{Error, Result};
use crate::lattice_geometry::{Point, Polytope};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

/// A finite graph on nodes `0..n`; parallel edges collapse on construction
/// and loops are flagged (a loop forces the zero chromatic polynomial).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Distinct edges `(i, j)` with `i < j`, sorted.
    edges: Vec<(usize, usize)>,
    has_loop: bool,
}

impl Graph {
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        let mut edges = BTreeSet::new();
        let mut has_loop = false;
        for &(a, b) in edge_list {
            if a >= n || b >= n {
                return Err(Error::Precondition(format!(
                    "edge ({}, {}) out of range for {} nodes",
                    a + 1,
                    b + 1,
                    n
                )));
            }
            if a == b {
                has_loop = true;
            } else {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        Ok(Graph {
            n,
            edges: edges.into_iter().collect(),
            has_loop,
        })
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph::new(n, &[]).unwrap()
    }

    /// Text format: first line `n`, then one edge `i j` per line (1-based).
    /// `#` starts a comment.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if n.is_none() {
                n = Some(line.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("expected node count, got {line:?}"),
                })?);
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected `i j`, got {line:?}"),
                });
            };
            let parse_node = |s: &str| -> Result<usize> {
                let v: usize = s.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad node label {s:?}"),
                })?;
                if v == 0 || v > n.unwrap() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("node {v} out of range 1..={}", n.unwrap()),
                    });
                }
                Ok(v - 1)
            };
            edges.push((parse_node(a)?, parse_node(b)?));
        }
        let n = n.ok_or(Error::Parse {
            line: 0,
            msg: "missing node count".into(),
        })?;
        Graph::new(n, &edges)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_loop(&self) -> bool {
        self.has_loop
    }
}

/// A total orientation: direction per edge, aligned with `graph.edges()`.
/// `arcs[k] = (from, to)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Orientation {
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// No coherently directed cycle (checked by Kahn peeling).
    pub fn is_acyclic(&self, n: usize) -> bool {
        let mut indegree = vec![0usize; n];
        for &(_, to) in &self.arcs {
            indegree[to] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &(from, to) in &self.arcs {
                if from == v {
                    indegree[to] -= 1;
                    if indegree[to] == 0 {
                        queue.push(to);
                    }
                }
            }
        }
        seen == n
    }

    /// Compatible with a coloring when `x[to] >= x[from]` on every arc.
    pub fn compatible_with(&self, coloring: &[u32]) -> bool {
        self.arcs
            .iter()
            .all(|&(from, to)| coloring[to] >= coloring[from])
    }

    /// GraphViz digraph source (1-based node labels).
    pub fn to_dot(&self, n: usize) -> String {
        let mut s = String::from("digraph {\n");
        for v in 0..n {
            let _ = writeln!(s, "  {};", v + 1);
        }
        for &(from, to) in &self.arcs {
            let _ = writeln!(s, "  {} -> {};", from + 1, to + 1);
        }
        s.push('}');
        s
    }
}

/// Deletion–contraction with memoization on the canonical edge list:
/// `c(G) = c(G - e) - c(G / e)`, base case `t^n` for the edgeless graph.
/// A loop short-circuits to the zero polynomial.
type ChromaticMemo = HashMap<(usize, Vec<(usize, usize)>), Polynomial>;

pub fn chromatic_polynomial(g: &Graph) -> Polynomial {
    if g.has_loop {
        return Polynomial::zero();
    }
    let mut memo = ChromaticMemo::new();
    chromatic_rec(g.n, &g.edges, &mut memo)
}

fn chromatic_rec(n: usize, edges: &[(usize, usize)], memo: &mut ChromaticMemo) -> Polynomial {
    if edges.is_empty() {
        return Polynomial::monomial(Rational::one(), n);
    }
    let key = (n, edges.to_vec());
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let (a, b) = *edges.last().unwrap();
    let deleted: Vec<(usize, usize)> = edges[..edges.len() - 1].to_vec();
    // contract b into a, relabel nodes above b down by one
    let relabel = |v: usize| -> usize {
        let v = if v == b { a } else { v };
        if v > b {
            v - 1
        } else {
            v
        }
    };
    let mut contracted = BTreeSet::new();
    for &(x, y) in &deleted {
        let (x, y) = (relabel(x), relabel(y));
        if x != y {
            contracted.insert((x.min(y), x.max(y)));
        }
    }
    let contracted: Vec<(usize, usize)> = contracted.into_iter().collect();
    let result = &chromatic_rec(n, &deleted, memo) - &chromatic_rec(n - 1, &contracted, memo);
    memo.insert(key, result.clone());
    result
}

/// Exhaustive proper-coloring count over `[t]^V`.
pub fn proper_colorings_brute(g: &Graph, t: u32) -> BigInt {
    assert!(t >= 1);
    if g.has_loop {
        return BigInt::zero();
    }
    let mut count = BigInt::zero();
    let mut coloring = vec![1u32; g.n];
    loop {
        if g.edges.iter().all(|&(i, j)| coloring[i] != coloring[j]) {
            count += 1;
        }
        if !increment(&mut coloring, t) {
            return count;
        }
    }
}

fn increment(coloring: &mut [u32], t: u32) -> bool {
    for c in coloring.iter_mut().rev() {
        if *c < t {
            *c += 1;
            return true;
        }
        *c = 1;
    }
    false
}

/// All acyclic orientations, enumerated from the `2^|E|` total orientations
/// by cycle detection. Empty when the graph has a loop.
pub fn acyclic_orientations(g: &Graph) -> Vec<Orientation> {
    if g.has_loop {
        return Vec::new();
    }
    let m = g.edges.len();
    assert!(m < 26, "orientation enumeration is desk scale");
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        let arcs: Vec<(usize, usize)> = g
            .edges
            .iter()
            .enumerate()
            .map(|(k, &(i, j))| {
                if mask & (1 << k) == 0 {
                    (i, j)
                } else {
                    (j, i)
                }
            })
            .collect();
        let o = Orientation { arcs };
        if o.is_acyclic(g.n) {
            out.push(o);
        }
    }
    out
}

/// Number of acyclic orientations compatible with the coloring.
pub fn greene_multiplicity(coloring: &[u32], acyclic: &[Orientation]) -> usize {
    acyclic.iter().filter(|o| o.compatible_with(coloring)).count()
}

/// Exhaustive count of (t-coloring, compatible acyclic orientation) pairs.
pub fn compatible_pairs(g: &Graph, t: u32) -> BigInt {
    assert!(t >= 1);
    let acyclic = acyclic_orientations(g);
    let mut count = BigInt::zero();
    let mut coloring = vec![1u32; g.n];
    loop {
        count += greene_multiplicity(&coloring, &acyclic);
        if !increment(&mut coloring, t) {
            return count;
        }
    }
}

/// The arrangement `x_i = x_j` over the edges of `g`, in `R^V`.
pub fn graphical_arrangement(g: &Graph) -> Arrangement {
    let hyperplanes = g
        .edges
        .iter()
        .map(|&(i, j)| {
            let mut normal = vec![Rational::zero(); g.n];
            normal[i] = Rational::one();
            normal[j] = -Rational::one();
            Hyperplane::new(normal, Rational::zero()).unwrap()
        })
        .collect();
    Arrangement::new(g.n, hyperplanes).unwrap()
}

/// A rational polytope with a rational arrangement acting as additional
/// interior boundary.
#[derive(Clone, Debug)]
pub struct InsideOutPolytope {
    polytope: Polytope,
    arrangement: Arrangement,
}

impl InsideOutPolytope {
    pub fn new(polytope: Polytope, arrangement: Arrangement) -> Result<InsideOutPolytope> {
        if polytope.ambient() != arrangement.dim() {
            return Err(Error::DimensionMismatch(format!(
                "polytope in R^{} with arrangement in R^{}",
                polytope.ambient(),
                arrangement.dim()
            )));
        }
        Ok(InsideOutPolytope {
            polytope,
            arrangement,
        })
    }

    /// The unit cube `[0,1]^V` with the graphical arrangement of `g`.
    pub fn cube_for_graph(g: &Graph) -> InsideOutPolytope {
        InsideOutPolytope {
            polytope: Polytope::unit_cube(g.node_count().max(1)),
            arrangement: graphical_arrangement(g),
        }
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }
}

/// The closed regions of an inside-out polytope: closures of the connected
/// components of `P° minus the arrangement`, identified by their full sign
/// vectors. Cells are carried as vertex sets of their closures and split
/// hyperplane by hyperplane.
#[derive(Clone, Debug)]
pub struct RegionDecomposition {
    /// Sign vector per region, one entry in {-1, +1} per hyperplane.
    signs: Vec<Vec<i8>>,
    hyperplanes: Vec<Hyperplane>,
}

impl RegionDecomposition {
    /// Requires a full-dimensional polytope.
    pub fn new(iop: &InsideOutPolytope) -> Result<RegionDecomposition> {
        let p = iop.polytope();
        if p.dim() != p.ambient() {
            return Err(Error::NotFullDimensional {
                dim: p.dim(),
                ambient: p.ambient(),
            });
        }
        let mut cells: Vec<(Vec<Point>, Vec<i8>)> = vec![(p.vertices().to_vec(), Vec::new())];
        for h in iop.arrangement().hyperplanes() {
            let mut next = Vec::with_capacity(cells.len());
            for (points, signs) in cells {
                let values: Vec<Rational> = points.iter().map(|x| h.eval(x)).collect();
                let has_pos = values.iter().any(|v| v.is_positive());
                let has_neg = values.iter().any(|v| v.is_negative());
                if has_pos && has_neg {
                    let (plus, minus) = split_cell(&points, &values);
                    let mut s_plus = signs.clone();
                    s_plus.push(1);
                    let mut s_minus = signs;
                    s_minus.push(-1);
                    next.push((plus, s_plus));
                    next.push((minus, s_minus));
                } else {
                    // touching or missing the hyperplane does not split
                    let mut s = signs;
                    s.push(if has_pos { 1 } else { -1 });
                    next.push((points, s));
                }
            }
            cells = next;
        }
        Ok(RegionDecomposition {
            signs: cells.into_iter().map(|(_, s)| s).collect(),
            hyperplanes: iop.arrangement().hyperplanes().to_vec(),
        })
    }

    pub fn region_count(&self) -> usize {
        self.signs.len()
    }

    pub fn sign_vectors(&self) -> &[Vec<i8>] {
        &self.signs
    }

    /// Number of closed regions containing `x` (assumed to lie in the
    /// polytope): regions whose sign vector matches the nonzero signs of `x`.
    pub fn multiplicity(&self, x: &[Rational]) -> usize {
        let point_signs: Vec<i8> = self
            .hyperplanes
            .iter()
            .map(|h| {
                let v = h.eval(x);
                if v.is_positive() {
                    1
                } else if v.is_negative() {
                    -1
                } else {
                    0
                }
            })
            .collect();
        self.signs
            .iter()
            .filter(|s| {
                s.iter()
                    .zip(&point_signs)
                    .all(|(&cell, &pt)| pt == 0 || pt == cell)
            })
            .count()
    }
}

/// Closure of `cell intersect {value >= 0}` and `{value <= 0}` as point sets:
/// points on the weak side plus all segment crossings between strict sides.
fn split_cell(points: &[Point], values: &[Rational]) -> (Vec<Point>, Vec<Point>) {
    let mut plus: Vec<Point> = Vec::new();
    let mut minus: Vec<Point> = Vec::new();
    for (p, v) in points.iter().zip(values) {
        if !v.is_negative() {
            plus.push(p.clone());
        }
        if !v.is_positive() {
            minus.push(p.clone());
        }
    }
    let mut crossings: BTreeSet<Point> = BTreeSet::new();
    for (p, vp) in points.iter().zip(values).filter(|(_, v)| v.is_positive()) {
        for (q, vq) in points.iter().zip(values).filter(|(_, v)| v.is_negative()) {
            // w on the segment [p, q] with value 0: w = (vp*q - vq*p)/(vp - vq)
            let denom = vp - vq;
            let w: Point = p
                .iter()
                .zip(q)
                .map(|(pc, qc)| (vp * qc - vq * pc) / &denom)
                .collect();
            crossings.insert(w);
        }
    }
    plus.extend(crossings.iter().cloned());
    minus.extend(crossings);
    (plus, minus)
}

/// The pair `(I, O)` at `1/t` lattice scale: `I` counts points of the closed
/// polytope off every hyperplane; `O` sums over all points of the closed
/// polytope the number of closed regions containing them.
pub fn inside_out_counts(iop: &InsideOutPolytope, t: u32) -> Result<(BigInt, BigInt)> {
    assert!(t >= 1);
    let regions = RegionDecomposition::new(iop)?;
    let t_big = BigInt::from(t);
    let t_rat = Rational::from_integer(t_big.clone());
    let mut inner = BigInt::zero();
    let mut outer = BigInt::zero();
    iop.polytope().for_each_lattice_point(&t_big, false, |y| {
        let x: Vec<Rational> = y
            .iter()
            .map(|c| Rational::from_integer(c.clone()) / &t_rat)
            .collect();
        let off_all = iop
            .arrangement()
            .hyperplanes()
            .iter()
            .all(|h| !h.contains(&x));
        if off_all {
            inner += 1;
        }
        outer += regions.multiplicity(&x);
    });
    Ok((inner, outer))
}

/// `I` for the open polytope: points of `(1/t) Z^d` in the interior of the
/// polytope missing every hyperplane.
pub fn inside_out_interior_count(iop: &InsideOutPolytope, t: u32) -> BigInt {
    assert!(t >= 1);
    let t_big = BigInt::from(t);
    let t_rat = Rational::from_integer(t_big.clone());
    let mut count = BigInt::zero();
    iop.polytope().for_each_lattice_point(&t_big, true, |y| {
        let x: Vec<Rational> = y
            .iter()
            .map(|c| Rational::from_integer(c.clone()) / &t_rat)
            .collect();
        if iop
            .arrangement()
            .hyperplanes()
            .iter()
            .all(|h| !h.contains(&x))
        {
            count += 1;
        }
    });
    count
}

/// Verifies the coloring reciprocity chain for `1 <= t <= horizon`:
/// (a) brute-force proper colorings equal the interior cube count at `t+1`
/// off the graphical arrangement, (b) `(-1)^|V| c(-t)` equals the compatible
/// pair count, and (c) the pair count equals the sum of acyclic orientations
/// compatible with each point of the `(t-1)`-dilate of the closed cube.
pub fn coloring_reciprocity_check(g: &Graph, horizon: u32) -> Result<bool> {
    if g.has_loop {
        return Err(Error::Precondition("graph must be loopless".into()));
    }
    if g.node_count() == 0 || g.node_count() > 5 || horizon > 4 {
        return Err(Error::Precondition(
            "reciprocity check is desk scale: 1..=5 nodes, horizon <= 4".into(),
        ));
    }
    let n = g.node_count();
    let chromatic = chromatic_polynomial(g);
    let iop = InsideOutPolytope::cube_for_graph(g);
    let acyclic = acyclic_orientations(g);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    for t in 1..=horizon {
        let brute = proper_colorings_brute(g, t);
        let geometric = inside_out_interior_count(&iop, t + 1);
        if brute != geometric {
            return Ok(false);
        }
        let pairs = compatible_pairs(g, t);
        let reciprocal = chromatic.eval_integer(&BigInt::from(-(t as i64))) * sign;
        if pairs != reciprocal {
            return Ok(false);
        }
        // (c): Greene multiplicities over the (t-1)-dilate of the closed
        // cube, i.e. colorings with values in {0, .., t-1}.
        let mut greene_total = BigInt::zero();
        let mut coloring = vec![0u32; n];
        loop {
            greene_total += greene_multiplicity(&coloring, &acyclic);
            let mut pos = n;
            let done = loop {
                if pos == 0 {
                    break true;
                }
                pos -= 1;
                if coloring[pos] + 1 < t {
                    coloring[pos] += 1;
                    coloring[pos + 1..].fill(0);
                    break false;
                }
            };
            if done {
                break;
            }
        }
        if greene_total != pairs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn k3_chromatic_polynomial() {
        let c = chromatic_polynomial(&Graph::complete(3));
        // t(t-1)(t-2)
        assert_eq!(c, Polynomial::from_int_coeffs(&[0, 2, -3, 1]));
        assert_eq!(c.eval_integer(&big(-1)), big(-6));
    }

    #[test]
    fn single_node_chromatic_is_t() {
        let c = chromatic_polynomial(&Graph::edgeless(1));
        assert_eq!(c, Polynomial::from_int_coeffs(&[0, 1]));
    }

    #[test]
    fn four_cycle_chromatic_matches_brute_force() {
        let g = Graph::cycle(4);
        let c = chromatic_polynomial(&g);
        // (t-1)^4 + (t-1)
        let tm1 = Polynomial::from_int_coeffs(&[-1, 1]);
        let expected = &(&(&tm1 * &tm1) * &(&tm1 * &tm1)) + &tm1;
        assert_eq!(c, expected);
        for t in 2..=4u32 {
            assert_eq!(c.eval_integer(&BigInt::from(t)), proper_colorings_brute(&g, t));
        }
    }

    #[test]
    fn loop_forces_zero_polynomial() {
        let g = Graph::new(2, &[(0, 0), (0, 1)]).unwrap();
        assert!(g.has_loop());
        assert!(chromatic_polynomial(&g).is_zero());
        assert!(acyclic_orientations(&g).is_empty());
        assert_eq!(proper_colorings_brute(&g, 3), big(0));
    }

    #[test]
    fn parallel_edges_collapse() {
        let g = Graph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges().len(), 1);
    }

    #[test]
    fn brute_force_counts() {
        assert_eq!(proper_colorings_brute(&Graph::complete(3), 3), big(6));
        assert_eq!(proper_colorings_brute(&Graph::edgeless(3), 4), big(64));
        assert_eq!(proper_colorings_brute(&Graph::cycle(4), 2), big(2));
    }

    #[test]
    fn acyclic_orientation_counts() {
        assert_eq!(acyclic_orientations(&Graph::complete(3)).len(), 6);
        assert_eq!(acyclic_orientations(&Graph::path(2)).len(), 2);
        // 2^4 minus the two coherent cycles
        assert_eq!(acyclic_orientations(&Graph::cycle(4)).len(), 14);
    }

    #[test]
    fn acyclic_count_equals_chromatic_at_minus_one() {
        for g in [
            Graph::complete(3),
            Graph::complete(4),
            Graph::cycle(4),
            Graph::cycle(5),
            Graph::path(4),
            Graph::edgeless(3),
        ] {
            let sign = if g.node_count() % 2 == 0 { 1 } else { -1 };
            let value = chromatic_polynomial(&g).eval_integer(&big(-1)) * sign;
            assert_eq!(BigInt::from(acyclic_orientations(&g).len()), value);
        }
    }

    #[test]
    fn compatible_pair_examples() {
        // (-1)^3 c_K3(-1) = 6: with one color every acyclic orientation is
        // compatible with the constant coloring
        assert_eq!(compatible_pairs(&Graph::complete(3), 1), big(6));
        // (-1)^2 c_K2(-2) = (-2)(-3) = 6
        assert_eq!(compatible_pairs(&Graph::complete(2), 2), big(6));
        // edgeless: one empty orientation, all t^n colorings
        assert_eq!(compatible_pairs(&Graph::edgeless(3), 3), big(27));
    }

    #[test]
    fn compatible_pairs_match_reciprocal_chromatic() {
        for g in [Graph::complete(3), Graph::cycle(4), Graph::path(3)] {
            let c = chromatic_polynomial(&g);
            let sign = if g.node_count() % 2 == 0 { 1 } else { -1 };
            for t in 1..=4u32 {
                assert_eq!(
                    compatible_pairs(&g, t),
                    c.eval_integer(&BigInt::from(-(t as i64))) * sign,
                    "t={t}"
                );
            }
        }
    }

    #[test]
    fn graphical_arrangement_regions_are_acyclic_orientations() {
        for g in [Graph::complete(3), Graph::cycle(4), Graph::path(4)] {
            let a = graphical_arrangement(&g);
            let expected = BigInt::from(acyclic_orientations(&g).len());
            assert_eq!(a.regions_zaslavsky().unwrap(), expected);
            assert_eq!(a.regions_deletion_restriction(), expected);
        }
    }

    #[test]
    fn region_sign_vectors_biject_with_acyclic_orientations() {
        // Sign of x_i - x_j on a region determines the orientation: the edge
        // points toward the larger coordinate.
        for g in [Graph::complete(3), Graph::cycle(4)] {
            let iop = InsideOutPolytope::cube_for_graph(&g);
            let regions = RegionDecomposition::new(&iop).unwrap();
            let mut from_regions: Vec<Orientation> = regions
                .sign_vectors()
                .iter()
                .map(|signs| {
                    let arcs = g
                        .edges()
                        .iter()
                        .zip(signs)
                        .map(|(&(i, j), &s)| if s < 0 { (i, j) } else { (j, i) })
                        .collect();
                    Orientation { arcs }
                })
                .collect();
            from_regions.sort();
            from_regions.dedup();
            let mut acyclic = acyclic_orientations(&g);
            acyclic.sort();
            assert_eq!(from_regions, acyclic);
        }
    }

    #[test]
    fn square_with_diagonal_inside_out_counts() {
        // Unit square with x1 = x2 at t = 2: nine half-integer points, three
        // on the diagonal; I = 6 and O = 9 + 3 = 12.
        let square = Polytope::unit_cube(2);
        let diagonal = Arrangement::new(
            2,
            vec![Hyperplane::from_ints(&[1, -1], 0).unwrap()],
        )
        .unwrap();
        let iop = InsideOutPolytope::new(square, diagonal).unwrap();
        let (i, o) = inside_out_counts(&iop, 2).unwrap();
        assert_eq!(i, big(6));
        assert_eq!(o, big(12));
    }

    #[test]
    fn empty_arrangement_makes_counts_coincide() {
        let square = Polytope::unit_cube(2);
        let iop = InsideOutPolytope::new(square, Arrangement::empty(2)).unwrap();
        let (i, o) = inside_out_counts(&iop, 3).unwrap();
        assert_eq!(i, big(16));
        assert_eq!(o, big(16));
    }

    #[test]
    fn k2_interior_count_reproduces_six_colorings_at_t6() {
        // 30 = c_K2(6) interior points at lattice scale 7
        let g = Graph::complete(2);
        let iop = InsideOutPolytope::cube_for_graph(&g);
        assert_eq!(inside_out_interior_count(&iop, 7), big(30));
        assert_eq!(proper_colorings_brute(&g, 6), big(30));
    }

    #[test]
    fn coloring_reciprocity_for_small_graphs() {
        assert!(coloring_reciprocity_check(&Graph::complete(3), 3).unwrap());
        assert!(coloring_reciprocity_check(&Graph::complete(2), 4).unwrap());
        assert!(coloring_reciprocity_check(&Graph::path(3), 3).unwrap());
    }

    #[test]
    fn disconnected_graph_chromatic_factors() {
        // K2 plus an isolated node: t^2 (t - 1)
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(
            chromatic_polynomial(&g),
            Polynomial::from_int_coeffs(&[0, 0, -1, 1])
        );
        for t in 1..=4u32 {
            assert_eq!(
                chromatic_polynomial(&g).eval_integer(&BigInt::from(t)),
                proper_colorings_brute(&g, t)
            );
        }
    }

    #[test]
    fn single_node_reciprocity() {
        let g = Graph::edgeless(1);
        assert!(coloring_reciprocity_check(&g, 4).unwrap());
    }

    #[test]
    fn parse_graph_text() {
        let g = Graph::parse("3\n1 2\n2 3\n# done\n").unwrap();
        assert_eq!(g, Graph::path(3));
        assert!(Graph::parse("2\n1 3\n").is_err());
        assert!(Graph::parse("").is_err());
    }

    #[test]
    fn dot_export_lists_arcs() {
        let g = Graph::path(2);
        let o = &acyclic_orientations(&g)[0];
        let dot = o.to_dot(2);
        assert!(dot.starts_with("digraph {"));
        assert!(dot.contains("->"));
    }

    #[test]
    fn orientation_compatibility() {
        let o = Orientation {
            arcs: vec![(0, 1), (1, 2)],
        };
        assert!(o.compatible_with(&[1, 1, 2]));
        assert!(!o.compatible_with(&[2, 1, 2]));
    }
}
