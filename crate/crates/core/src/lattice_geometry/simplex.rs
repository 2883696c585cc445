//! Lattice simplices, the half-open fundamental parallelepipeds of their
//! cones, and the height-graded point counts h(z) and h~(z) that make up
//! Ehrhart series numerators.
//!
//! The cone over a simplex lifts each vertex v to (v, 1); the fundamental
//! parallelepiped is the half-open box spanned by those generators with
//! coefficients in [0,1) (or (0,1] for the interior variant). Points are
//! enumerated by scanning the integer bounding box and solving for the
//! coefficient vector of each candidate, with the row operations precomputed
//! and scaled to integers.

use super::polytope::{Point, Polytope};
use crate::algebra::{Polynomial, Rational, RationalGF};
use crate::error::{Error, Result};
use crate::linalg::ColumnSolver;
use crate::parallel;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A polytope with exactly `dim + 1` affinely independent vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    polytope: Polytope,
}

impl Simplex {
    pub fn from_polytope(polytope: Polytope) -> Result<Simplex> {
        if polytope.vertices().len() != polytope.dim() + 1 {
            return Err(Error::NotASimplex(
                polytope.vertices().len(),
                polytope.dim(),
            ));
        }
        Ok(Simplex { polytope })
    }

    /// The simplex with vertex set exactly `points`; errors when the points
    /// are affinely dependent (some of them would not be vertices).
    pub fn from_points(points: &[Point]) -> Result<Simplex> {
        let distinct: std::collections::BTreeSet<&Point> = points.iter().collect();
        let polytope = Polytope::hull(points)?;
        if polytope.vertices().len() != distinct.len() {
            return Err(Error::NotASimplex(distinct.len(), polytope.dim()));
        }
        Simplex::from_polytope(polytope)
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn vertices(&self) -> &[Point] {
        self.polytope.vertices()
    }

    pub fn dim(&self) -> usize {
        self.polytope.dim()
    }

    pub fn is_lattice(&self) -> bool {
        self.polytope.is_lattice()
    }

    /// `|det(v_1 - v_0, .., v_d - v_0)|` for a full-dimensional lattice
    /// simplex: the number of lattice points of its fundamental
    /// parallelepiped, and d! times its volume.
    pub fn normalized_volume(&self) -> BigInt {
        assert_eq!(
            self.polytope.dim(),
            self.polytope.ambient(),
            "normalized volume by determinant needs a full-dimensional simplex"
        );
        let v = self.vertices();
        let d = self.dim();
        let mut m: Vec<Vec<Rational>> = (1..=d)
            .map(|i| v[i].iter().zip(&v[0]).map(|(a, b)| a - b).collect())
            .collect();
        let det = determinant(&mut m);
        let det = det.abs();
        assert!(det.is_integer(), "lattice simplex has integer volume");
        det.to_integer()
    }

    /// The pair `(h, h~)`: coefficient `t` of `h` counts lattice points at
    /// height `t` in the fundamental parallelepiped with coefficients in
    /// `[0,1)`; `h~` is the `(0,1]` variant. Heights run 0..d and 1..d+1.
    pub fn h_vectors(&self) -> Result<(Polynomial, Polynomial)> {
        if !self.is_lattice() {
            return Err(Error::NotLattice);
        }
        let generators: Vec<Vec<BigInt>> = self
            .vertices()
            .iter()
            .map(|v| {
                let mut g: Vec<BigInt> = v.iter().map(|c| c.numer().clone()).collect();
                g.push(BigInt::one());
                g
            })
            .collect();
        let pped = HalfOpenParallelepiped::new(generators)?;
        let (lower, upper) = pped.lattice_points_by_height();
        let to_poly = |counts: Vec<BigInt>| {
            Polynomial::from_coeffs(
                counts
                    .into_iter()
                    .map(Rational::from_integer)
                    .collect::<Vec<_>>(),
            )
        };
        Ok((to_poly(lower), to_poly(upper)))
    }

    /// `h(z) / (1-z)^(d+1)`.
    pub fn ehrhart_series(&self) -> Result<RationalGF> {
        let (h, _) = self.h_vectors()?;
        Ok(RationalGF::new(h, vec![1; self.dim() + 1]))
    }

    /// Closed membership via barycentric coordinates.
    pub fn contains(&self, x: &[Rational]) -> bool {
        let columns: Vec<Vec<Rational>> = self
            .vertices()
            .iter()
            .map(|v| {
                let mut col = v.clone();
                col.push(Rational::one());
                col
            })
            .collect();
        let solver = ColumnSolver::new(&columns);
        let mut rhs = x.to_vec();
        rhs.push(Rational::one());
        match solver.solve(&rhs) {
            Some(coords) => coords.iter().all(|c| !c.is_negative()),
            None => false,
        }
    }
}

/// The half-open box spanned by linearly independent integer generators.
#[derive(Clone, Debug)]
pub struct HalfOpenParallelepiped {
    generators: Vec<Vec<BigInt>>,
    /// Integer row operations: `ops * x` divided by `denom` gives the
    /// generator coefficients; trailing rows must vanish for consistency.
    ops: Vec<Vec<BigInt>>,
    denom: BigInt,
}

impl HalfOpenParallelepiped {
    pub fn new(generators: Vec<Vec<BigInt>>) -> Result<HalfOpenParallelepiped> {
        let columns: Vec<Vec<Rational>> = generators
            .iter()
            .map(|g| g.iter().map(|c| Rational::from_integer(c.clone())).collect())
            .collect();
        if crate::linalg::rank(&columns) != generators.len() {
            return Err(Error::Precondition(
                "parallelepiped generators must be linearly independent".into(),
            ));
        }
        let solver = ColumnSolver::new(&columns);
        let (ops, denom) = solver.scaled_integer_ops();
        Ok(HalfOpenParallelepiped {
            generators,
            ops,
            denom,
        })
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    /// Counts of lattice points graded by the last coordinate (the height),
    /// for coefficient ranges `[0,1)` and `(0,1]` simultaneously. Both result
    /// vectors have length m+1 where m is the number of generators.
    pub fn lattice_points_by_height(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let m = self.generators.len();
        let space = self.generators[0].len();
        let mut lo = vec![BigInt::zero(); space];
        let mut hi = vec![BigInt::zero(); space];
        for g in &self.generators {
            for (c, v) in g.iter().enumerate() {
                if v.is_positive() {
                    hi[c] += v;
                } else {
                    lo[c] += v;
                }
            }
        }
        let first_range: Vec<BigInt> = {
            let mut vals = Vec::new();
            let mut v = lo[0].clone();
            while v <= hi[0] {
                vals.push(v.clone());
                v += 1;
            }
            vals
        };
        let results = parallel::map_chunked(&first_range, |x0| {
            let mut counts = (
                vec![BigInt::zero(); m + 1],
                vec![BigInt::zero(); m + 1],
            );
            // partial[j] = ops * (x with coordinates 0..=j fixed, rest 0)
            let mut partial: Vec<BigInt> = self.ops.iter().map(|row| &row[0] * x0).collect();
            self.scan(1, &lo, &hi, &mut partial, &mut counts, x0);
            counts
        });
        let mut lower = vec![BigInt::zero(); m + 1];
        let mut upper = vec![BigInt::zero(); m + 1];
        for (l, u) in results {
            for (acc, v) in lower.iter_mut().zip(&l) {
                *acc += v;
            }
            for (acc, v) in upper.iter_mut().zip(&u) {
                *acc += v;
            }
        }
        (lower, upper)
    }

    fn scan(
        &self,
        coord: usize,
        lo: &[BigInt],
        hi: &[BigInt],
        partial: &mut [BigInt],
        counts: &mut (Vec<BigInt>, Vec<BigInt>),
        last_value: &BigInt,
    ) {
        let space = self.generators[0].len();
        let m = self.generators.len();
        if coord == space {
            // classify: coefficients are partial[i] / denom for i < m;
            // rows m.. must vanish.
            if partial[m..].iter().any(|v| !v.is_zero()) {
                return;
            }
            let in_lower = partial[..m]
                .iter()
                .all(|y| !y.is_negative() && *y < self.denom);
            let in_upper = partial[..m]
                .iter()
                .all(|y| y.is_positive() && *y <= self.denom);
            if in_lower || in_upper {
                let height = last_value
                    .to_usize()
                    .expect("heights of parallelepiped points are 0..=m");
                if in_lower {
                    counts.0[height] += 1;
                }
                if in_upper {
                    counts.1[height] += 1;
                }
            }
            return;
        }
        let mut v = lo[coord].clone();
        while v <= hi[coord] {
            if !v.is_zero() {
                for (p, row) in partial.iter_mut().zip(&self.ops) {
                    *p += &row[coord] * &v;
                }
            }
            self.scan(coord + 1, lo, hi, partial, counts, &v);
            if !v.is_zero() {
                for (p, row) in partial.iter_mut().zip(&self.ops) {
                    *p -= &row[coord] * &v;
                }
            }
            v += 1;
        }
    }
}

fn determinant(m: &mut [Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let pivot_row = m[c].clone();
        for work_row in m.iter_mut().skip(c + 1) {
            if !work_row[c].is_zero() {
                let f = &work_row[c] / &pivot_row[c];
                for (x, p) in work_row.iter_mut().zip(&pivot_row).skip(c) {
                    let sub = p * &f;
                    *x = &*x - &sub;
                }
            }
        }
    }
    det
}
