//! Face lattices of small polytopes, keyed by the vertex sets cut out by
//! facet subsets, and the Euler characteristic `f(-1)`.

use super::polytope::Polytope;
use crate::algebra::{Polynomial, Rational};
use crate::error::{Error, Result};
use crate::linalg;
use crate::poset::Poset;
use num_bigint::BigInt;
use std::collections::HashSet;

const DIM_LIMIT: usize = 4;
const FACET_LIMIT: usize = 22;

/// All faces of a polytope, graded by dimension, including the empty face
/// (dimension -1) and the polytope itself.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    /// Vertex bitmask per face, sorted by (dimension, mask); index 0 is the
    /// empty face.
    masks: Vec<u64>,
    dims: Vec<i64>,
}

/// Enumerates faces as intersections of facet subsets. Desk scale only:
/// dimension at most 4.
pub fn face_lattice(p: &Polytope) -> Result<FaceLattice> {
    if p.dim() > DIM_LIMIT {
        return Err(Error::DimensionTooLarge {
            dim: p.dim(),
            limit: DIM_LIMIT,
        });
    }
    let nv = p.vertices().len();
    if nv > 64 {
        return Err(Error::TooManyPoints(nv, 64));
    }
    let tight = p.facet_tight_masks();
    if tight.len() > FACET_LIMIT {
        return Err(Error::TooManyPoints(tight.len(), FACET_LIMIT));
    }
    let all: u64 = if nv == 64 { u64::MAX } else { (1u64 << nv) - 1 };
    let mut found: HashSet<u64> = HashSet::new();
    found.insert(0); // the empty face
    for subset in 0u64..(1 << tight.len()) {
        let mut mask = all;
        for (i, t) in tight.iter().enumerate() {
            if subset & (1 << i) != 0 {
                mask &= t;
            }
        }
        found.insert(mask);
    }
    let mut entries: Vec<(i64, u64)> = found
        .into_iter()
        .map(|mask| {
            let dim = if mask == 0 {
                -1
            } else {
                vertex_subset_dim(p, mask) as i64
            };
            (dim, mask)
        })
        .collect();
    entries.sort();
    let (dims, masks) = entries.into_iter().unzip();
    Ok(FaceLattice { masks, dims })
}

fn vertex_subset_dim(p: &Polytope, mask: u64) -> usize {
    let vertices: Vec<&Vec<Rational>> = p
        .vertices()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, v)| v)
        .collect();
    let base = vertices[0];
    let dirs: Vec<Vec<Rational>> = vertices[1..]
        .iter()
        .map(|v| v.iter().zip(base.iter()).map(|(a, b)| a - b).collect())
        .collect();
    linalg::rank(&dirs)
}

impl FaceLattice {
    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn dims(&self) -> &[i64] {
        &self.dims
    }

    /// `f(t) = sum over nonempty faces of t^(dim F)`.
    pub fn f_polynomial(&self) -> Polynomial {
        let top = *self.dims.last().unwrap_or(&-1);
        let mut coeffs = vec![Rational::from_integer(BigInt::from(0)); (top.max(0) as usize) + 1];
        for &d in &self.dims {
            if d >= 0 {
                coeffs[d as usize] += Rational::from_integer(BigInt::from(1));
            }
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// Face counts by dimension, `counts[k]` = number of k-faces.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = *self.dims.last().unwrap_or(&-1);
        let mut counts = vec![0usize; (top.max(0) as usize) + 1];
        for &d in &self.dims {
            if d >= 0 {
                counts[d as usize] += 1;
            }
        }
        counts
    }

    /// The inclusion order on faces (vertex-set containment), empty face at
    /// the bottom, the polytope on top.
    pub fn poset(&self) -> Poset {
        let n = self.masks.len();
        let mut relations = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.masks[i] & self.masks[j] == self.masks[i] {
                    relations.push((i, j));
                }
            }
        }
        Poset::from_relations(n, &relations).expect("face inclusion is a poset")
    }
}

/// `f(-1)` over nonempty faces; equals 1 for every nonempty bounded polytope.
pub fn euler_characteristic(p: &Polytope) -> Result<BigInt> {
    let fl = face_lattice(p)?;
    Ok(fl.f_polynomial().eval_integer(&BigInt::from(-1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::lattice_geometry::Point;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn lattice_polytope(data: &[&[i64]]) -> Polytope {
        let points: Vec<Point> = data
            .iter()
            .map(|p| p.iter().map(|&c| rat(c, 1)).collect())
            .collect();
        Polytope::hull(&points).unwrap()
    }

    #[test]
    fn segment_faces() {
        let p = lattice_polytope(&[&[0], &[1]]);
        let fl = face_lattice(&p).unwrap();
        // empty face, 2 vertices, 1 edge
        assert_eq!(fl.len(), 4);
        assert_eq!(fl.f_vector(), vec![2, 1]);
    }

    #[test]
    fn triangle_face_counts() {
        let p = Polytope::standard_simplex(2);
        let fl = face_lattice(&p).unwrap();
        assert_eq!(fl.f_vector(), vec![3, 3, 1]);
        assert_eq!(euler_characteristic(&p).unwrap(), big(1));
    }

    #[test]
    fn cube_f_polynomial() {
        // facet-incidence enumeration: 8 vertices, 12 edges, 6 squares, 1 cell
        let p = Polytope::unit_cube(3);
        let fl = face_lattice(&p).unwrap();
        assert_eq!(fl.f_vector(), vec![8, 12, 6, 1]);
        assert_eq!(
            fl.f_polynomial(),
            Polynomial::from_int_coeffs(&[8, 12, 6, 1])
        );
        // 8 - 12 + 6 - 1 = 1
        assert_eq!(euler_characteristic(&p).unwrap(), big(1));
    }

    #[test]
    fn point_euler_characteristic() {
        let p = lattice_polytope(&[&[7, 3]]);
        assert_eq!(euler_characteristic(&p).unwrap(), big(1));
    }

    #[test]
    fn face_mobius_alternates_by_dimension_gap() {
        // mu(G, F) = (-1)^(dim F - dim G) on the full face lattice, empty
        // face included.
        for p in [
            lattice_polytope(&[&[0], &[3]]),
            Polytope::standard_simplex(2),
            Polytope::unit_cube(3),
        ] {
            let fl = face_lattice(&p).unwrap();
            let poset = fl.poset();
            let table = poset.mobius();
            for x in 0..fl.len() {
                for y in 0..fl.len() {
                    if poset.le(x, y) {
                        let gap = fl.dims()[y] - fl.dims()[x];
                        let expected = if gap % 2 == 0 { big(1) } else { big(-1) };
                        assert_eq!(table.mu(x, y), expected, "x={x} y={y}");
                    }
                }
            }
        }
    }

    #[test]
    fn segment_face_mobius_from_empty_face() {
        let p = lattice_polytope(&[&[0], &[1]]);
        let fl = face_lattice(&p).unwrap();
        let poset = fl.poset();
        let table = poset.mobius();
        // mu(empty, F) = (-1)^(dim F + 1): +1 on the edge, -1 on vertices
        for y in 0..fl.len() {
            let expected = match fl.dims()[y] {
                -1 => big(1),
                0 => big(-1),
                1 => big(1),
                _ => unreachable!(),
            };
            assert_eq!(table.mu(0, y), expected);
        }
    }

    #[test]
    fn four_cube_is_within_the_limit() {
        let p = Polytope::unit_cube(4);
        let fl = face_lattice(&p).unwrap();
        assert_eq!(fl.f_vector(), vec![16, 32, 24, 8, 1]);
        assert_eq!(euler_characteristic(&p).unwrap(), big(1));
    }

    #[test]
    fn dimension_guard() {
        // a 5-dimensional cube is past the desk-scale limit
        let p = Polytope::unit_cube(5);
        assert!(matches!(
            face_lattice(&p),
            Err(Error::DimensionTooLarge { .. })
        ));
    }
}
