//! Rational polytopes and exact lattice-point geometry: hulls, dilation
//! counts, Ehrhart (quasi)polynomials and series, fundamental
//! parallelepipeds of simplices, regular triangulations, and face lattices.

mod ehrhart;
mod faces;
mod polytope;
mod simplex;
mod triangulation;

pub use ehrhart::{ehrhart, ehrhart_reciprocity_check, ehrhart_series, normalized_volume};
pub use faces::{euler_characteristic, face_lattice, FaceLattice};
pub use polytope::{Point, Polytope, MAX_HULL_POINTS};
pub use simplex::{HalfOpenParallelepiped, Simplex};
pub use triangulation::{regular_triangulation, triangulation_mobius_check, FaceComplex, Triangulation};
