//! Regular triangulations by random lifting, and the closed-form Möbius
//! function of the face poset of a triangulation.
//!
//! The algorithm lifts each vertex to a random integer height, takes the
//! convex hull in one dimension up, and projects the lower facets back down.
//! A degenerate lift (a non-simplex lower facet) triggers a redraw, up to a
//! fixed budget.

use super::polytope::{Point, Polytope};
use super::simplex::Simplex;
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::poset::Poset;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

const LIFT_BUDGET: usize = 100;

/// A triangulation of a full-dimensional polytope using only its vertices.
#[derive(Clone, Debug)]
pub struct Triangulation {
    polytope: Polytope,
    simplices: Vec<Simplex>,
    /// Sorted vertex indices (into `polytope.vertices()`) per simplex.
    vertex_sets: Vec<Vec<usize>>,
}

/// The face poset of a triangulation, with the empty face at the bottom and
/// an artificial top element of dimension `d + 1`.
#[derive(Clone, Debug)]
pub struct FaceComplex {
    pub poset: Poset,
    /// Dimension per element: -1 for the empty face, d+1 for the top.
    pub dims: Vec<i64>,
    /// Whether the face lies in the boundary of the polytope (false for the
    /// empty face and the top element).
    pub boundary: Vec<bool>,
    /// Index of the empty face (always 0) and of the top element.
    pub top: usize,
}

/// Lifts vertices to seeded random integer heights in `[1, 1000 n^2]`,
/// projects the lower hull facets, and redraws on degeneracy. Deterministic
/// for a fixed seed.
pub fn regular_triangulation(p: &Polytope, seed: u64) -> Result<Triangulation> {
    if p.dim() != p.ambient() || p.dim() == 0 {
        return Err(Error::NotFullDimensional {
            dim: p.dim(),
            ambient: p.ambient(),
        });
    }
    let d = p.dim();
    let n = p.vertices().len();
    if n == d + 1 {
        // Already a simplex: the lifted hull would not gain a dimension, and
        // the triangulation is the polytope itself.
        let simplex = Simplex::from_points(p.vertices())?;
        return Ok(Triangulation {
            polytope: p.clone(),
            simplices: vec![simplex],
            vertex_sets: vec![(0..n).collect()],
        });
    }
    let max_lift = 1000 * (n as i64) * (n as i64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..LIFT_BUDGET {
        let lifts: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=max_lift)).collect();
        let lifted: Vec<Point> = p
            .vertices()
            .iter()
            .zip(&lifts)
            .map(|(v, &r)| {
                let mut w = v.clone();
                w.push(Rational::from_integer(BigInt::from(r)));
                w
            })
            .collect();
        let upper = match Polytope::hull(&lifted) {
            Ok(q) => q,
            Err(_) => continue,
        };
        if upper.dim() != d + 1 {
            continue;
        }
        let mut vertex_sets = Vec::new();
        for (normal, offset) in upper.facets() {
            if !normal[d].is_negative() {
                continue; // not a lower facet
            }
            let tight: Vec<usize> = lifted
                .iter()
                .enumerate()
                .filter(|(_, w)| {
                    normal
                        .iter()
                        .zip(w.iter())
                        .map(|(c, x)| Rational::from_integer(c.clone()) * x)
                        .sum::<Rational>()
                        == Rational::from_integer(offset.clone())
                })
                .map(|(i, _)| i)
                .collect();
            if tight.len() != d + 1 {
                continue 'attempt; // degenerate lift
            }
            vertex_sets.push(tight);
        }
        let mut simplices = Vec::with_capacity(vertex_sets.len());
        for set in &vertex_sets {
            let points: Vec<Point> = set.iter().map(|&i| p.vertices()[i].clone()).collect();
            match Simplex::from_points(&points) {
                Ok(s) => simplices.push(s),
                Err(_) => continue 'attempt,
            }
        }
        vertex_sets.sort();
        simplices.sort_by_key(|s| s.vertices().to_vec());
        return Ok(Triangulation {
            polytope: p.clone(),
            simplices,
            vertex_sets,
        });
    }
    Err(Error::LiftingBudgetExhausted(LIFT_BUDGET))
}

impl Triangulation {
    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn vertex_sets(&self) -> &[Vec<usize>] {
        &self.vertex_sets
    }

    /// All nonempty faces of all simplices, as sorted vertex-index lists.
    /// Every subset of a simplex's vertex set spans a face.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
        for set in &self.vertex_sets {
            let m = set.len();
            for mask in 1u32..(1 << m) {
                let face: Vec<usize> = (0..m)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| set[i])
                    .collect();
                out.insert(face);
            }
        }
        out.into_iter().collect()
    }

    /// The face poset with empty face and artificial top element.
    pub fn face_complex(&self) -> FaceComplex {
        let faces = self.faces();
        let d = self.polytope.dim();
        let n = faces.len() + 2; // empty face, faces, top
        let top = n - 1;
        let mut relations = Vec::new();
        for i in 1..=faces.len() {
            relations.push((0, i));
            relations.push((i, top));
        }
        relations.push((0, top));
        for (i, a) in faces.iter().enumerate() {
            for (j, b) in faces.iter().enumerate() {
                if i != j && is_subset(a, b) {
                    relations.push((i + 1, j + 1));
                }
            }
        }
        let poset = Poset::from_relations(n, &relations).expect("face inclusion is a poset");
        let mut dims = vec![-1i64; n];
        dims[top] = d as i64 + 1;
        for (i, f) in faces.iter().enumerate() {
            dims[i + 1] = f.len() as i64 - 1;
        }
        let tight_masks = self.polytope.facet_tight_masks();
        let mut boundary = vec![false; n];
        for (i, f) in faces.iter().enumerate() {
            let face_mask: u64 = f.iter().map(|&v| 1u64 << v).sum();
            boundary[i + 1] = tight_masks.iter().any(|m| m & face_mask == face_mask);
        }
        FaceComplex {
            poset,
            dims,
            boundary,
            top,
        }
    }

    /// Whether some simplex of the triangulation contains the point.
    pub fn covers_point(&self, x: &[Rational]) -> bool {
        self.simplices.iter().any(|s| s.contains(x))
    }

    /// Total normalized volume of the simplices.
    pub fn total_normalized_volume(&self) -> BigInt {
        self.simplices
            .iter()
            .map(Simplex::normalized_volume)
            .sum()
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Verifies the closed form of the Möbius function of the face poset with
/// artificial top: `mu(G, F)` is 0 when `F` is the top and `G` is empty or
/// lies in the boundary, and `(-1)^(dim F - dim G)` otherwise.
pub fn triangulation_mobius_check(tri: &Triangulation) -> bool {
    let complex = tri.face_complex();
    let table = complex.poset.mobius();
    let n = complex.dims.len();
    for x in 0..n {
        for y in 0..n {
            if !complex.poset.le(x, y) {
                continue;
            }
            let expected = if y == complex.top && (x == 0 || complex.boundary[x]) {
                BigInt::zero()
            } else {
                let diff = complex.dims[y] - complex.dims[x];
                if diff % 2 == 0 {
                    BigInt::from(1)
                } else {
                    BigInt::from(-1)
                }
            };
            if table.mu(x, y) != expected {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

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
    fn triangle_triangulates_to_itself() {
        let p = lattice_polytope(&[&[0, 0], &[1, 0], &[0, 1]]);
        for seed in [0, 1, 7] {
            let tri = regular_triangulation(&p, seed).unwrap();
            assert_eq!(tri.simplices().len(), 1);
        }
    }

    #[test]
    fn square_splits_into_two_triangles() {
        let p = lattice_polytope(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        for seed in 0..5 {
            let tri = regular_triangulation(&p, seed).unwrap();
            assert_eq!(tri.simplices().len(), 2, "seed {seed}");
            assert_eq!(tri.total_normalized_volume(), big(2));
        }
    }

    #[test]
    fn cube_triangulation_volume_and_size() {
        let p = Polytope::unit_cube(3);
        let tri = regular_triangulation(&p, 1).unwrap();
        assert!(
            (5..=6).contains(&tri.simplices().len()),
            "cube triangulations have 5 or 6 simplices, got {}",
            tri.simplices().len()
        );
        assert_eq!(tri.total_normalized_volume(), big(6));
    }

    #[test]
    fn triangulation_is_deterministic_per_seed() {
        let p = Polytope::unit_cube(3);
        let a = regular_triangulation(&p, 42).unwrap();
        let b = regular_triangulation(&p, 42).unwrap();
        assert_eq!(a.vertex_sets(), b.vertex_sets());
    }

    #[test]
    fn lattice_points_of_dilates_are_covered() {
        let p = lattice_polytope(&[&[0, 0], &[2, 0], &[1, 2], &[0, 1]]);
        let tri = regular_triangulation(&p, 3).unwrap();
        for t in 1..=4i64 {
            let t_big = big(t);
            let t_rat = rat(t, 1);
            p.for_each_lattice_point(&t_big, false, |y| {
                let x: Vec<Rational> = y
                    .iter()
                    .map(|c| Rational::from_integer(c.clone()) / &t_rat)
                    .collect();
                assert!(tri.covers_point(&x), "uncovered point {y:?} at t={t}");
            });
        }
    }

    #[test]
    fn interior_face_counts_reassemble_the_total() {
        // Every lattice point lies in the relative interior of exactly one
        // face, so interior counts over faces sum to the closed count.
        let p = lattice_polytope(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]);
        let tri = regular_triangulation(&p, 5).unwrap();
        for t in 1..=3i64 {
            let t_big = big(t);
            let total: BigInt = tri
                .faces()
                .iter()
                .map(|face| {
                    let pts: Vec<Point> =
                        face.iter().map(|&i| p.vertices()[i].clone()).collect();
                    Polytope::hull(&pts).unwrap().lattice_count(&t_big, true)
                })
                .sum();
            assert_eq!(total, p.lattice_count(&t_big, false), "t={t}");
        }
    }

    #[test]
    fn mobius_closed_form_on_triangle_and_square() {
        let triangle = lattice_polytope(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert!(triangulation_mobius_check(
            &regular_triangulation(&triangle, 2).unwrap()
        ));
        let square = lattice_polytope(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert!(triangulation_mobius_check(
            &regular_triangulation(&square, 2).unwrap()
        ));
    }

    #[test]
    fn interior_faces_get_the_alternating_mobius_value() {
        // mu(G, top) = (-1)^(d + 1 - dim G) for faces not in the boundary
        let square = lattice_polytope(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let tri = regular_triangulation(&square, 2).unwrap();
        let complex = tri.face_complex();
        let table = complex.poset.mobius();
        let d = 2i64;
        let mut interior_faces = 0;
        for x in 1..complex.top {
            if !complex.boundary[x] {
                interior_faces += 1;
                let expected = if (d + 1 - complex.dims[x]) % 2 == 0 {
                    big(1)
                } else {
                    big(-1)
                };
                assert_eq!(table.mu(x, complex.top), expected);
            }
        }
        // the diagonal and the two triangles are interior
        assert_eq!(interior_faces, 3);
    }

    #[test]
    fn lower_dimensional_input_is_rejected() {
        let segment = lattice_polytope(&[&[0, 0], &[1, 1]]);
        assert!(matches!(
            regular_triangulation(&segment, 0),
            Err(Error::NotFullDimensional { .. })
        ));
    }
}
