//! Rational polytopes from their vertex description, with derived affine
//! hull, facet inequalities, and exact lattice-point counting in dilates.
//!
//! The V-to-H conversion is brute force over vertex subsets, which is exact
//! and adequate up to [`MAX_HULL_POINTS`] input points.

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::linalg::{self, ColumnSolver};
use crate::parallel;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeSet, HashSet};

pub type Point = Vec<Rational>;

/// Input-size limit for the brute-force hull.
pub const MAX_HULL_POINTS: usize = 16;

/// A bounded rational polytope. `vertices` are exactly the extreme points;
/// `equations` cut out the affine hull; `facets` are irredundant within the
/// affine hull, with the polytope on the `<=` side. Both systems are stored
/// with primitive integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    ambient: usize,
    dim: usize,
    vertices: Vec<Point>,
    equations: Vec<(Vec<BigInt>, BigInt)>,
    facets: Vec<(Vec<BigInt>, BigInt)>,
}

impl Polytope {
    /// Convex hull of finitely many rational points.
    pub fn hull(points: &[Point]) -> Result<Polytope> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let ambient = points[0].len();
        if points.iter().any(|p| p.len() != ambient) {
            return Err(Error::DimensionMismatch(
                "points of different lengths".into(),
            ));
        }
        let distinct: BTreeSet<Point> = points.iter().cloned().collect();
        let points: Vec<Point> = distinct.into_iter().collect();
        if points.len() > MAX_HULL_POINTS {
            return Err(Error::TooManyPoints(points.len(), MAX_HULL_POINTS));
        }

        let base = points[0].clone();
        // Independent direction basis (original difference vectors).
        let mut basis: Vec<Vec<Rational>> = Vec::new();
        let mut span_rows: Vec<Vec<Rational>> = Vec::new();
        for p in &points[1..] {
            let dir: Vec<Rational> = p.iter().zip(&base).map(|(a, b)| a - b).collect();
            let mut trial = span_rows.clone();
            trial.push(dir.clone());
            if linalg::rref(&mut trial).len() > span_rows.len() {
                span_rows = trial;
                basis.push(dir);
            }
        }
        let dim = basis.len();

        let equations = affine_hull_equations(&points, ambient);

        if dim == 0 {
            return Ok(Polytope {
                ambient,
                dim,
                vertices: points,
                equations,
                facets: Vec::new(),
            });
        }

        // Coordinates within the affine hull.
        let solver = ColumnSolver::new(&basis);
        let coords: Vec<Vec<Rational>> = points
            .iter()
            .map(|p| {
                let rhs: Vec<Rational> = p.iter().zip(&base).map(|(a, b)| a - b).collect();
                solver.solve(&rhs).expect("points lie in their affine hull")
            })
            .collect();

        let local_facets = facets_in_local_coords(&coords, dim);

        // Extreme points: full-rank set of tight facet normals.
        let vertices: Vec<Point> = points
            .iter()
            .zip(&coords)
            .filter(|(_, u)| {
                let tight: Vec<Vec<Rational>> = local_facets
                    .iter()
                    .filter(|(a, b)| {
                        dot_int_rat(a, u) == Rational::from_integer(b.clone())
                    })
                    .map(|(a, _)| a.iter().map(|c| Rational::from_integer(c.clone())).collect())
                    .collect();
                linalg::rank(&tight) == dim
            })
            .map(|(p, _)| p.clone())
            .collect();

        // Pull the facet inequalities back to ambient coordinates: c = B w
        // with (B^T B) w = a, so that B^T c = a.
        let gram: Vec<Vec<Rational>> = (0..dim)
            .map(|i| (0..dim).map(|j| dot(&basis[i], &basis[j])).collect())
            .collect();
        let gram_solver = ColumnSolver::new(&gram);
        let mut facets: Vec<(Vec<BigInt>, BigInt)> = local_facets
            .iter()
            .map(|(a, b)| {
                let a_rat: Vec<Rational> =
                    a.iter().map(|c| Rational::from_integer(c.clone())).collect();
                let w = gram_solver.solve(&a_rat).expect("Gram matrix is invertible");
                let c: Vec<Rational> = (0..ambient)
                    .map(|coord| {
                        basis
                            .iter()
                            .zip(&w)
                            .map(|(bv, wi)| &bv[coord] * wi)
                            .sum()
                    })
                    .collect();
                let offset = dot(&c, &base) + Rational::from_integer(b.clone());
                linalg::primitive_integer_row(&c, &offset)
            })
            .collect();
        facets.sort();

        Ok(Polytope {
            ambient,
            dim,
            vertices,
            equations,
            facets,
        })
    }

    /// `[0,1]^d`, built directly (the vertex count defeats the hull limit
    /// already at d = 5).
    pub fn unit_cube(d: usize) -> Polytope {
        assert!((1..=20).contains(&d), "cube dimension out of supported range");
        let mut vertices = Vec::with_capacity(1 << d);
        for mask in 0u32..(1 << d) {
            vertices.push(
                (0..d)
                    .map(|i| {
                        Rational::from_integer(BigInt::from((mask >> i) & 1))
                    })
                    .collect(),
            );
        }
        vertices.sort();
        let mut facets = Vec::new();
        for i in 0..d {
            let mut low = vec![BigInt::zero(); d];
            low[i] = -BigInt::one();
            facets.push((low, BigInt::zero()));
            let mut high = vec![BigInt::zero(); d];
            high[i] = BigInt::one();
            facets.push((high, BigInt::one()));
        }
        facets.sort();
        Polytope {
            ambient: d,
            dim: d,
            vertices,
            equations: Vec::new(),
            facets,
        }
    }

    /// `conv{0, e_1, .., e_d}`.
    pub fn standard_simplex(d: usize) -> Polytope {
        let mut points = vec![vec![Rational::zero(); d]];
        for i in 0..d {
            let mut p = vec![Rational::zero(); d];
            p[i] = Rational::one();
            points.push(p);
        }
        Polytope::hull(&points).expect("standard simplex")
    }

    /// Text format: first line the ambient dimension, then one vertex per
    /// line as space-separated rationals `p/q`. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Polytope> {
        let mut ambient: Option<usize> = None;
        let mut points = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if ambient.is_none() {
                ambient = Some(line.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("expected ambient dimension, got {line:?}"),
                })?);
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != ambient.unwrap() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!(
                        "expected {} coordinates, got {}",
                        ambient.unwrap(),
                        fields.len()
                    ),
                });
            }
            let mut p = Vec::with_capacity(fields.len());
            for f in fields {
                p.push(crate::algebra::parse_rational(f).map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad rational {f:?}"),
                })?);
            }
            points.push(p);
        }
        if points.is_empty() {
            return Err(Error::Parse {
                line: 0,
                msg: "polytope file has no vertices".into(),
            });
        }
        Polytope::hull(&points)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn equations(&self) -> &[(Vec<BigInt>, BigInt)] {
        &self.equations
    }

    pub fn facets(&self) -> &[(Vec<BigInt>, BigInt)] {
        &self.facets
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.iter().all(Rational::is_integer))
    }

    /// Least common multiple of all vertex coordinate denominators.
    pub fn vertex_denominator_lcm(&self) -> BigInt {
        let mut l = BigInt::one();
        for v in &self.vertices {
            for c in v {
                l = l.lcm(c.denom());
            }
        }
        l
    }

    /// Closed membership.
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.equations
            .iter()
            .all(|(c, g)| dot_int_rat(c, x) == Rational::from_integer(g.clone()))
            && self
                .facets
                .iter()
                .all(|(c, g)| dot_int_rat(c, x) <= Rational::from_integer(g.clone()))
    }

    /// Relative-interior membership: affine-hull equations hold, facet
    /// inequalities are strict. For a point this coincides with membership.
    pub fn contains_relative_interior(&self, x: &[Rational]) -> bool {
        self.equations
            .iter()
            .all(|(c, g)| dot_int_rat(c, x) == Rational::from_integer(g.clone()))
            && self
                .facets
                .iter()
                .all(|(c, g)| dot_int_rat(c, x) < Rational::from_integer(g.clone()))
    }

    /// Per-coordinate integer bounds `[lo, hi]` of the dilate `t * P`.
    pub fn bounding_box(&self, t: &BigInt) -> Vec<(BigInt, BigInt)> {
        let t_rat = Rational::from_integer(t.clone());
        (0..self.ambient)
            .map(|c| {
                let mut lo: Option<Rational> = None;
                let mut hi: Option<Rational> = None;
                for v in &self.vertices {
                    let val = &v[c] * &t_rat;
                    if lo.as_ref().is_none_or(|m| val < *m) {
                        lo = Some(val.clone());
                    }
                    if hi.as_ref().is_none_or(|m| val > *m) {
                        hi = Some(val);
                    }
                }
                (
                    lo.unwrap().ceil().to_integer(),
                    hi.unwrap().floor().to_integer(),
                )
            })
            .collect()
    }

    /// Exact number of lattice points in `t * P` (closed) and in the relative
    /// interior of `t * P`, in one scan. Columns along the last coordinate
    /// are counted by interval narrowing rather than point-by-point testing.
    pub fn lattice_point_counts(&self, t: &BigInt) -> (BigInt, BigInt) {
        assert!(t.is_positive(), "dilation factor must be positive");
        let box_bounds = self.bounding_box(t);
        if box_bounds.iter().any(|(lo, hi)| lo > hi) {
            return (BigInt::zero(), BigInt::zero());
        }
        let d = self.ambient;
        let scaled = |rows: &[(Vec<BigInt>, BigInt)]| -> Vec<(Vec<BigInt>, BigInt)> {
            rows.iter().map(|(c, g)| (c.clone(), g * t)).collect()
        };
        let equations = scaled(&self.equations);
        let facets = scaled(&self.facets);
        if d == 1 {
            let (closed, interior) =
                column_counts(&equations, &facets, &[], &box_bounds[0]);
            return (closed, interior);
        }
        // Chunk the first coordinate across threads; reduce in order.
        let first_values: Vec<BigInt> = int_range(&box_bounds[0]);
        let results = parallel::map_chunked(&first_values, |y0| {
            let mut closed = BigInt::zero();
            let mut interior = BigInt::zero();
            let mut prefix = vec![y0.clone()];
            scan_prefixes(
                &equations,
                &facets,
                &box_bounds,
                &mut prefix,
                &mut closed,
                &mut interior,
            );
            (closed, interior)
        });
        let mut closed = BigInt::zero();
        let mut interior = BigInt::zero();
        for (c, i) in results {
            closed += c;
            interior += i;
        }
        (closed, interior)
    }

    /// Lattice point count of `t * P`, closed or relative-interior.
    pub fn lattice_count(&self, t: &BigInt, interior: bool) -> BigInt {
        let (closed, inner) = self.lattice_point_counts(t);
        if interior {
            inner
        } else {
            closed
        }
    }

    /// Visits every lattice point of `t * P` (closed or relative-interior).
    /// Plain box scan; meant for small instances that need the points
    /// themselves rather than the count.
    pub fn for_each_lattice_point(
        &self,
        t: &BigInt,
        interior: bool,
        mut f: impl FnMut(&[BigInt]),
    ) {
        let box_bounds = self.bounding_box(t);
        if box_bounds.iter().any(|(lo, hi)| lo > hi) {
            return;
        }
        let mut current: Vec<BigInt> = box_bounds.iter().map(|(lo, _)| lo.clone()).collect();
        let t_rat = Rational::from_integer(t.clone());
        loop {
            let x: Vec<Rational> = current
                .iter()
                .map(|y| Rational::from_integer(y.clone()) / &t_rat)
                .collect();
            let inside = if interior {
                self.contains_relative_interior(&x)
            } else {
                self.contains(&x)
            };
            if inside {
                f(&current);
            }
            // odometer increment
            let mut pos = self.ambient;
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                if current[pos] < box_bounds[pos].1 {
                    current[pos] += 1;
                    for reset in pos + 1..self.ambient {
                        current[reset] = box_bounds[reset].0.clone();
                    }
                    break;
                }
            }
        }
    }

    /// Bitmask per facet of the vertices tight on it. Requires at most 64
    /// vertices.
    pub fn facet_tight_masks(&self) -> Vec<u64> {
        assert!(self.vertices.len() <= 64, "too many vertices for bitmasks");
        self.facets
            .iter()
            .map(|(c, g)| {
                let mut mask = 0u64;
                for (i, v) in self.vertices.iter().enumerate() {
                    if dot_int_rat(c, v) == Rational::from_integer(g.clone()) {
                        mask |= 1 << i;
                    }
                }
                mask
            })
            .collect()
    }
}

fn int_range(bounds: &(BigInt, BigInt)) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut v = bounds.0.clone();
    while v <= bounds.1 {
        out.push(v.clone());
        v += 1;
    }
    out
}

/// Recursively fixes coordinates `0..d-1`, then counts the final column.
fn scan_prefixes(
    equations: &[(Vec<BigInt>, BigInt)],
    facets: &[(Vec<BigInt>, BigInt)],
    box_bounds: &[(BigInt, BigInt)],
    prefix: &mut Vec<BigInt>,
    closed: &mut BigInt,
    interior: &mut BigInt,
) {
    let d = box_bounds.len();
    if prefix.len() == d - 1 {
        let (c, i) = column_counts(equations, facets, prefix, &box_bounds[d - 1]);
        *closed += c;
        *interior += i;
        return;
    }
    let idx = prefix.len();
    let mut v = box_bounds[idx].0.clone();
    while v <= box_bounds[idx].1 {
        prefix.push(v.clone());
        scan_prefixes(equations, facets, box_bounds, prefix, closed, interior);
        prefix.pop();
        v += 1;
    }
}

/// Counts lattice points on the column `prefix x [lo, hi]` subject to integer
/// constraints `c . y = g` / `c . y <= g` (already scaled by the dilation).
/// Returns (closed, relative-interior) counts; interior keeps equations but
/// makes facet inequalities strict.
fn column_counts(
    equations: &[(Vec<BigInt>, BigInt)],
    facets: &[(Vec<BigInt>, BigInt)],
    prefix: &[BigInt],
    last_bounds: &(BigInt, BigInt),
) -> (BigInt, BigInt) {
    let last = prefix.len();
    let mut lo_c = last_bounds.0.clone();
    let mut hi_c = last_bounds.1.clone();
    let mut lo_i = lo_c.clone();
    let mut hi_i = hi_c.clone();
    let empty = (BigInt::zero(), BigInt::zero());

    let partial = |c: &[BigInt], g: &BigInt| -> BigInt {
        let mut s = g.clone();
        for (cc, y) in c[..last].iter().zip(prefix) {
            if !cc.is_zero() {
                s -= cc * y;
            }
        }
        s
    };

    for (c, g) in equations {
        let s = partial(c, g);
        let cl = &c[last];
        if cl.is_zero() {
            if !s.is_zero() {
                return empty;
            }
        } else {
            let (q, r) = s.div_rem(cl);
            if !r.is_zero() {
                return empty;
            }
            if q > lo_c {
                lo_c = q.clone();
            }
            if q < hi_c {
                hi_c = q.clone();
            }
            if q > lo_i {
                lo_i = q.clone();
            }
            if q < hi_i {
                hi_i = q;
            }
        }
    }

    let mut closed_empty = false;
    let mut interior_empty = false;
    for (c, g) in facets {
        if closed_empty && interior_empty {
            break;
        }
        let s = partial(c, g);
        let cl = &c[last];
        if cl.is_zero() {
            if s.is_negative() {
                closed_empty = true;
            }
            if !s.is_positive() {
                interior_empty = true;
            }
        } else if cl.is_positive() {
            let fl = s.div_floor(cl);
            if fl < hi_c {
                hi_c = fl;
            }
            let strict_hi = s.div_ceil(cl) - 1;
            if strict_hi < hi_i {
                hi_i = strict_hi;
            }
        } else {
            let ce = s.div_ceil(cl);
            if ce > lo_c {
                lo_c = ce;
            }
            let strict_lo = s.div_floor(cl) + 1;
            if strict_lo > lo_i {
                lo_i = strict_lo;
            }
        }
    }

    let count = |lo: &BigInt, hi: &BigInt, is_empty: bool| -> BigInt {
        if is_empty || lo > hi {
            BigInt::zero()
        } else {
            hi - lo + 1
        }
    };
    (
        count(&lo_c, &hi_c, closed_empty),
        count(&lo_i, &hi_i, interior_empty),
    )
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn dot_int_rat(a: &[BigInt], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .map(|(x, y)| Rational::from_integer(x.clone()) * y)
        .sum()
}

/// Primitive-integer equations cutting out the affine hull of `points`.
fn affine_hull_equations(points: &[Point], ambient: usize) -> Vec<(Vec<BigInt>, BigInt)> {
    // (c, g) with c.p = g for all points: nullspace of the rows (p | -1).
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| {
            let mut row = p.clone();
            row.push(-Rational::one());
            row
        })
        .collect();
    let mut basis = linalg::nullspace(&rows, ambient + 1);
    let _ = linalg::rref(&mut basis);
    basis
        .into_iter()
        .map(|row| {
            let (coeffs, rhs) = row.split_at(ambient);
            linalg::primitive_integer_row(coeffs, &rhs[0])
        })
        .collect()
}

/// Brute-force facet enumeration for a full-dimensional point set in R^k:
/// every k-subset spanning a (k-1)-dimensional affine set proposes a
/// hyperplane; kept when all points lie weakly on one side.
fn facets_in_local_coords(coords: &[Vec<Rational>], k: usize) -> Vec<(Vec<BigInt>, BigInt)> {
    let n = coords.len();
    let mut found: HashSet<(Vec<BigInt>, BigInt)> = HashSet::new();
    let mut subset = vec![0usize; k];
    enumerate_subsets(n, k, &mut subset, 0, 0, &mut |s: &[usize]| {
        let dirs: Vec<Vec<Rational>> = s[1..]
            .iter()
            .map(|&i| {
                coords[i]
                    .iter()
                    .zip(&coords[s[0]])
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        let null = linalg::nullspace(&dirs, k);
        if null.len() != 1 {
            return; // subset does not span a unique hyperplane
        }
        let normal = &null[0];
        let offset = dot(normal, &coords[s[0]]);
        let mut pos = false;
        let mut neg = false;
        for u in coords {
            let v = dot(normal, u) - &offset;
            if v.is_positive() {
                pos = true;
            } else if v.is_negative() {
                neg = true;
            }
            if pos && neg {
                return;
            }
        }
        let (oriented_normal, oriented_offset) = if pos {
            (normal.iter().map(|c| -c.clone()).collect::<Vec<_>>(), -offset)
        } else {
            (normal.clone(), offset)
        };
        found.insert(linalg::primitive_integer_row(
            &oriented_normal,
            &oriented_offset,
        ));
    });
    found.into_iter().collect()
}

fn enumerate_subsets(
    n: usize,
    k: usize,
    subset: &mut Vec<usize>,
    depth: usize,
    start: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if depth == k {
        f(subset);
        return;
    }
    for i in start..n {
        subset[depth] = i;
        enumerate_subsets(n, k, subset, depth + 1, i + 1, f);
    }
}
