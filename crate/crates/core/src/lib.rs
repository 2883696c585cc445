//! Exact-arithmetic counting functions of combinatorial geometry.
//!
//! This crate computes four families of counting functions — characteristic
//! polynomials of hyperplane arrangements, Ehrhart (quasi)polynomials of
//! rational polytopes, chromatic polynomials of graphs, and P-partition
//! generating functions of posets — and verifies their reciprocity identities
//! (Zaslavsky, Ehrhart–Macdonald, Stanley) against independent brute-force
//! enumeration. All arithmetic is exact: arbitrary-precision integers and
//! rationals throughout, no floating point anywhere.
//!
//! Module map:
//! - [`algebra`] — polynomials, quasipolynomials, and rational generating
//!   functions over exact rationals
//! - [`poset`] — finite posets, Möbius functions, linear extensions, descent
//!   statistics
//! - [`arrangement`] — rational hyperplane arrangements, flats, characteristic
//!   polynomials, region counts
//! - [`lattice_geometry`] — rational polytopes, lattice-point counting,
//!   Ehrhart theory, triangulations, face lattices
//! - [`graph_coloring`] — chromatic polynomials, acyclic orientations,
//!   inside-out counting on the unit cube
//! - [`ppartition`] — (strict) P-partitions and the order-cone decomposition
//!   by linear extensions
//! - [`suite`] — seeded random instance generators and batch verification
//!   suites
//!
//! ```
//! use num_bigint::BigInt;
//! use reciprocity_core::graph_coloring::{acyclic_orientations, chromatic_polynomial, Graph};
//! use reciprocity_core::lattice_geometry::{ehrhart, Polytope};
//!
//! // the triangle counting function evaluates at -t to signed interior counts
//! let triangle = Polytope::standard_simplex(2);
//! let counting = ehrhart(&triangle);
//! assert_eq!(counting.eval_integer(&BigInt::from(4)), BigInt::from(15));
//! assert_eq!(
//!     counting.eval_integer(&BigInt::from(-4)),
//!     triangle.lattice_count(&BigInt::from(4), true)
//! );
//!
//! // a chromatic polynomial at -1 counts acyclic orientations, up to sign
//! let graph = Graph::cycle(4);
//! let value = chromatic_polynomial(&graph).eval_integer(&BigInt::from(-1));
//! assert_eq!(value, BigInt::from(acyclic_orientations(&graph).len()));
//! ```

#![forbid(unsafe_code)]

pub mod algebra;
pub mod arrangement;
pub mod error;
pub mod graph_coloring;
pub mod lattice_geometry;
pub mod linalg;
pub mod parallel;
pub mod poset;
pub mod ppartition;
pub mod suite;

pub use error::{Error, Result};
