//! Rational hyperplane arrangements: the poset of flats, characteristic
//! polynomials, and region counts by two independent routes (the Möbius
//! evaluation at -1 and deletion–restriction).

use crate::algebra::{Polynomial, Rational};
use crate::error::{Error, Result};
use crate::linalg;
use crate::poset::Poset;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashSet;

/// The set `{x : normal . x = offset}`, stored with the first nonzero
/// coordinate of the normal scaled to +1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    normal: Vec<Rational>,
    offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Hyperplane> {
        let Some(first) = normal.iter().position(|c| !c.is_zero()) else {
            return Err(Error::ZeroNormal);
        };
        let scale = normal[first].clone();
        Ok(Hyperplane {
            normal: normal.into_iter().map(|c| c / &scale).collect(),
            offset: offset / scale,
        })
    }

    pub fn from_ints(normal: &[i64], offset: i64) -> Result<Hyperplane> {
        Hyperplane::new(
            normal
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
            Rational::from_integer(BigInt::from(offset)),
        )
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// `normal . x - offset`.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.normal
            .iter()
            .zip(x)
            .map(|(c, v)| c * v)
            .sum::<Rational>()
            - &self.offset
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.eval(x).is_zero()
    }

    /// The augmented row `[normal | offset]`.
    fn augmented_row(&self) -> Vec<Rational> {
        let mut row = self.normal.clone();
        row.push(self.offset.clone());
        row
    }
}

/// A finite set of distinct hyperplanes in a common ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    /// Deduplicates; every hyperplane must live in `R^dim`.
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Arrangement> {
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        for h in hyperplanes {
            if h.dim() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "hyperplane in R^{} inside an arrangement in R^{dim}",
                    h.dim()
                )));
            }
            if seen.insert(h.clone()) {
                kept.push(h);
            }
        }
        Ok(Arrangement {
            dim,
            hyperplanes: kept,
        })
    }

    pub fn empty(dim: usize) -> Arrangement {
        Arrangement {
            dim,
            hyperplanes: Vec::new(),
        }
    }

    /// `x_j = 0` for each coordinate.
    pub fn boolean(d: usize) -> Arrangement {
        let hyperplanes = (0..d)
            .map(|j| {
                let mut normal = vec![0i64; d];
                normal[j] = 1;
                Hyperplane::from_ints(&normal, 0).unwrap()
            })
            .collect();
        Arrangement { dim: d, hyperplanes }
    }

    /// `x_j = x_k` for all `1 <= j < k <= d`.
    pub fn braid(d: usize) -> Arrangement {
        let mut hyperplanes = Vec::new();
        for j in 0..d {
            for k in j + 1..d {
                let mut normal = vec![0i64; d];
                normal[j] = 1;
                normal[k] = -1;
                hyperplanes.push(Hyperplane::from_ints(&normal, 0).unwrap());
            }
        }
        Arrangement { dim: d, hyperplanes }
    }

    /// Text format: first line `d`, then one hyperplane per line as
    /// `c_1 .. c_d b` (rationals as `p/q`) meaning `c . x = b`.
    pub fn parse(text: &str) -> Result<Arrangement> {
        let mut dim: Option<usize> = None;
        let mut hyperplanes = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if dim.is_none() {
                dim = Some(line.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("expected ambient dimension, got {line:?}"),
                })?);
                continue;
            }
            let d = dim.unwrap();
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != d + 1 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected {} rationals, got {}", d + 1, fields.len()),
                });
            }
            let mut values = Vec::with_capacity(d + 1);
            for f in &fields {
                values.push(crate::algebra::parse_rational(f).map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad rational {f:?}"),
                })?);
            }
            let offset = values.pop().unwrap();
            hyperplanes.push(Hyperplane::new(values, offset).map_err(|_| Error::Parse {
                line: line_no,
                msg: "hyperplane normal is zero".into(),
            })?);
        }
        let dim = dim.ok_or(Error::Parse {
            line: 0,
            msg: "missing ambient dimension".into(),
        })?;
        Arrangement::new(dim, hyperplanes)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// All flats (nonempty intersections of subsets, including the ambient
    /// space), ordered by reverse inclusion, with Möbius values.
    pub fn flats(&self) -> FlatPoset {
        let mut seen: HashSet<Flat> = HashSet::new();
        let ambient = Flat {
            system: Vec::new(),
            dim: self.dim,
        };
        seen.insert(ambient);
        // DFS over subsets with an incrementally row-reduced system; an
        // inconsistent (empty) intersection prunes all supersets on this
        // branch.
        let rows: Vec<Vec<Rational>> = self.hyperplanes.iter().map(|h| h.augmented_row()).collect();
        self.flat_dfs(&rows, 0, &Vec::new(), &mut seen);
        let mut flats: Vec<Flat> = seen.into_iter().collect();
        flats.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.system.cmp(&b.system)));
        let n = flats.len();
        let mut leq = Vec::with_capacity(n * n);
        for f in &flats {
            for g in &flats {
                leq.push(f.contains_flat(g));
            }
        }
        let mut matrix = vec![false; n * n];
        matrix.copy_from_slice(&leq);
        let poset = poset_from_closed(n, matrix);
        let table = poset.mobius();
        let mobius: Vec<BigInt> = (0..n).map(|i| table.mu(0, i)).collect();
        FlatPoset {
            flats,
            poset,
            mobius,
        }
    }

    fn flat_dfs(
        &self,
        rows: &[Vec<Rational>],
        next: usize,
        system: &[Vec<Rational>],
        seen: &mut HashSet<Flat>,
    ) {
        for j in next..rows.len() {
            let mut candidate = system.to_vec();
            candidate.push(rows[j].clone());
            let Some(canonical) = linalg::canonical_affine_system(candidate) else {
                continue; // empty intersection; supersets through j are empty too
            };
            let dim = self.dim - canonical.len();
            seen.insert(Flat {
                system: canonical.clone(),
                dim,
            });
            self.flat_dfs(rows, j + 1, &canonical, seen);
        }
    }

    /// `h(t) = sum over flats of mu(F) t^(dim F)`.
    pub fn characteristic_polynomial(&self) -> Polynomial {
        let fp = self.flats();
        let mut coeffs = vec![Rational::zero(); self.dim + 1];
        for (flat, mu) in fp.flats.iter().zip(&fp.mobius) {
            coeffs[flat.dim] += Rational::from_integer(mu.clone());
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// Region count as `(-1)^d h(-1)`; errors if the value is not a positive
    /// integer (which would indicate an internal inconsistency).
    pub fn regions_zaslavsky(&self) -> Result<BigInt> {
        let h = self.characteristic_polynomial();
        let mut value = h.eval_integer(&BigInt::from(-1));
        if self.dim % 2 == 1 {
            value = -value;
        }
        if value.is_positive() {
            Ok(value)
        } else {
            Err(Error::Internal(format!(
                "region count {value} from the characteristic polynomial is not positive"
            )))
        }
    }

    /// Region count by the deletion–restriction recursion
    /// `r(A) = r(A - H) + r(A restricted to H)`, no Möbius function involved.
    pub fn regions_deletion_restriction(&self) -> BigInt {
        if self.hyperplanes.is_empty() {
            return BigInt::one();
        }
        let mut deleted = self.clone();
        let last = deleted.hyperplanes.pop().unwrap();
        let flat = Flat::from_hyperplane(&last, self.dim);
        let restricted = deleted.induced_arrangement(&flat);
        deleted.regions_deletion_restriction() + restricted.regions_deletion_restriction()
    }

    /// The arrangement inside the flat `f`, in coordinates of the flat:
    /// hyperplanes containing `f` are dropped, the rest become hyperplanes of
    /// the (dim f)-dimensional space parameterized by a rational affine map.
    pub fn induced_arrangement(&self, f: &Flat) -> Arrangement {
        if f.dim == self.dim {
            return self.clone();
        }
        let point = f.particular_point();
        let basis = f.direction_basis();
        let k = f.dim;
        let mut hyperplanes = Vec::new();
        for h in &self.hyperplanes {
            let reduced_normal: Vec<Rational> = basis
                .iter()
                .map(|b| h.normal.iter().zip(b).map(|(c, v)| c * v).sum())
                .collect();
            if reduced_normal.iter().all(Zero::is_zero) {
                continue; // h contains f or misses it entirely
            }
            let shift: Rational = h.normal.iter().zip(&point).map(|(c, v)| c * v).sum();
            let offset = &h.offset - &shift;
            hyperplanes.push(Hyperplane::new(reduced_normal, offset).unwrap());
        }
        Arrangement::new(k, hyperplanes).unwrap()
    }
}

fn poset_from_closed(n: usize, leq: Vec<bool>) -> Poset {
    // The flat order is already reflexive, transitive and antisymmetric, but
    // route through the validating constructor by listing all relations.
    let mut relations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && leq[i * n + j] {
                relations.push((i, j));
            }
        }
    }
    Poset::from_relations(n, &relations).expect("reverse inclusion is a partial order")
}

/// A nonempty affine subspace written as a canonical row-reduced system
/// `A x = b`; the ambient space is the empty system. Canonical form makes
/// equality syntactic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    /// RREF rows `[a_1 .. a_d | b]`, zero rows dropped.
    system: Vec<Vec<Rational>>,
    dim: usize,
}

impl Flat {
    pub fn ambient(dim: usize) -> Flat {
        Flat {
            system: Vec::new(),
            dim,
        }
    }

    pub fn from_hyperplane(h: &Hyperplane, ambient_dim: usize) -> Flat {
        let system =
            linalg::canonical_affine_system(vec![h.augmented_row()]).expect("hyperplane nonempty");
        Flat {
            system,
            dim: ambient_dim - 1,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_ambient(&self) -> bool {
        self.system.is_empty()
    }

    /// Set containment `self` contains `g`: every defining equation of `self`
    /// must be implied by (reduce to zero against) the system of `g`.
    pub fn contains_flat(&self, g: &Flat) -> bool {
        self.system.iter().all(|row| g.reduces_to_zero(row))
    }

    fn reduces_to_zero(&self, row: &[Rational]) -> bool {
        let mut work = row.to_vec();
        for sys_row in &self.system {
            let lead = sys_row
                .iter()
                .position(|c| !c.is_zero())
                .expect("no zero rows in canonical systems");
            if !work[lead].is_zero() {
                let factor = work[lead].clone();
                for (w, s) in work.iter_mut().zip(sys_row) {
                    let sub = s * &factor;
                    *w = &*w - &sub;
                }
            }
        }
        work.iter().all(Zero::is_zero)
    }

    /// A point on the flat (free variables set to zero).
    pub fn particular_point(&self) -> Vec<Rational> {
        let width = self.system.first().map_or(self.dim + 1, Vec::len);
        if self.system.is_empty() {
            return vec![Rational::zero(); width - 1];
        }
        linalg::particular_solution(&self.system).expect("flats are nonempty")
    }

    /// Basis of the direction space (nullspace of the coefficient part).
    pub fn direction_basis(&self) -> Vec<Vec<Rational>> {
        let ambient = if self.system.is_empty() {
            self.dim
        } else {
            self.system[0].len() - 1
        };
        let coeff_rows: Vec<Vec<Rational>> = self
            .system
            .iter()
            .map(|r| r[..ambient].to_vec())
            .collect();
        linalg::nullspace(&coeff_rows, ambient)
    }
}

/// The flats of an arrangement ordered by reverse inclusion (`F` below `G`
/// iff `F` contains `G`), with `mu(F) = mu(ambient, F)` precomputed. Index 0
/// is the ambient space.
#[derive(Clone, Debug)]
pub struct FlatPoset {
    flats: Vec<Flat>,
    poset: Poset,
    mobius: Vec<BigInt>,
}

impl FlatPoset {
    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// `mu(ambient, flats[i])`.
    pub fn mobius(&self, i: usize) -> &BigInt {
        &self.mobius[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn coordinate_arrangement_in_r3_has_eight_flats() {
        // ambient, 3 planes, 3 lines, origin
        let a = Arrangement::boolean(3);
        let fp = a.flats();
        assert_eq!(fp.len(), 8);
        let dims: Vec<usize> = fp.flats().iter().map(Flat::dim).collect();
        assert_eq!(dims, vec![3, 2, 2, 2, 1, 1, 1, 0]);
    }

    #[test]
    fn empty_arrangement_has_one_flat() {
        let fp = Arrangement::empty(2).flats();
        assert_eq!(fp.len(), 1);
        assert!(fp.flats()[0].is_ambient());
    }

    #[test]
    fn braid_d3_flats_match_partition_lattice() {
        // Subset intersection enumeration gives 5 flats: ambient, 3 planes,
        // and the common line x1 = x2 = x3.
        let fp = Arrangement::braid(3).flats();
        assert_eq!(fp.len(), 5);
        let dims: Vec<usize> = fp.flats().iter().map(Flat::dim).collect();
        assert_eq!(dims, vec![3, 2, 2, 2, 1]);
    }

    #[test]
    fn boolean_characteristic_polynomial() {
        for d in 1..=4 {
            let h = Arrangement::boolean(d).characteristic_polynomial();
            // (t-1)^d
            let mut expected = Polynomial::one();
            for _ in 0..d {
                expected = &expected * &Polynomial::from_int_coeffs(&[-1, 1]);
            }
            assert_eq!(h, expected);
        }
    }

    #[test]
    fn braid_characteristic_polynomial() {
        for d in 1..=6 {
            let h = Arrangement::braid(d).characteristic_polynomial();
            // t(t-1)...(t-d+1)
            let mut expected = Polynomial::from_int_coeffs(&[0, 1]);
            for j in 1..d {
                expected = &expected * &Polynomial::from_int_coeffs(&[-(j as i64), 1]);
            }
            assert_eq!(h, expected, "d={d}");
        }
    }

    #[test]
    fn boolean_d6_characteristic_polynomial() {
        let h = Arrangement::boolean(6).characteristic_polynomial();
        let mut expected = Polynomial::one();
        for _ in 0..6 {
            expected = &expected * &Polynomial::from_int_coeffs(&[-1, 1]);
        }
        assert_eq!(h, expected);
    }

    #[test]
    fn generic_position_closed_form_d3() {
        // 4 generic planes in R^3: t^3 - 4t^2 + 6t - 4.
        let a = Arrangement::new(
            3,
            vec![
                Hyperplane::from_ints(&[1, 0, 0], 0).unwrap(),
                Hyperplane::from_ints(&[0, 1, 0], 0).unwrap(),
                Hyperplane::from_ints(&[0, 0, 1], 0).unwrap(),
                Hyperplane::from_ints(&[1, 1, 1], 1).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(
            a.characteristic_polynomial(),
            Polynomial::from_int_coeffs(&[-4, 6, -4, 1])
        );
    }

    #[test]
    fn header_only_file_is_the_empty_arrangement() {
        let a = Arrangement::parse("2\n").unwrap();
        assert!(a.is_empty());
        assert_eq!(
            a.characteristic_polynomial(),
            Polynomial::from_int_coeffs(&[0, 0, 1])
        );
        assert_eq!(a.regions_zaslavsky().unwrap(), big(1));
    }

    #[test]
    fn generic_lines_characteristic_polynomial() {
        // 3 lines in general position in R^2: t^2 - 3t + 3.
        let a = Arrangement::new(
            2,
            vec![
                Hyperplane::from_ints(&[1, 0], 0).unwrap(),
                Hyperplane::from_ints(&[0, 1], 0).unwrap(),
                Hyperplane::from_ints(&[1, 1], 1).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(
            a.characteristic_polynomial(),
            Polynomial::from_int_coeffs(&[3, -3, 1])
        );
        assert_eq!(a.regions_zaslavsky().unwrap(), big(7));
        assert_eq!(a.regions_deletion_restriction(), big(7));
    }

    #[test]
    fn braid_d4_has_24_regions() {
        let a = Arrangement::braid(4);
        assert_eq!(a.regions_zaslavsky().unwrap(), big(24));
        assert_eq!(a.regions_deletion_restriction(), big(24));
    }

    #[test]
    fn empty_arrangement_has_one_region() {
        let a = Arrangement::empty(3);
        assert_eq!(a.regions_zaslavsky().unwrap(), big(1));
        assert_eq!(a.regions_deletion_restriction(), big(1));
    }

    #[test]
    fn two_generic_lines_make_four_regions() {
        // 1 + 2 + 1 from the general-position evaluation
        let a = Arrangement::new(
            2,
            vec![
                Hyperplane::from_ints(&[1, 0], 0).unwrap(),
                Hyperplane::from_ints(&[0, 1], 0).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(a.regions_zaslavsky().unwrap(), big(4));
    }

    #[test]
    fn octants_by_deletion_restriction() {
        assert_eq!(Arrangement::boolean(3).regions_deletion_restriction(), big(8));
        assert_eq!(Arrangement::braid(3).regions_deletion_restriction(), big(6));
    }

    #[test]
    fn induced_on_axis_is_single_point() {
        // coordinate arrangement in R^2 restricted to the x-axis (y = 0)
        let a = Arrangement::boolean(2);
        let x_axis = Flat::from_hyperplane(&Hyperplane::from_ints(&[0, 1], 0).unwrap(), 2);
        let induced = a.induced_arrangement(&x_axis);
        assert_eq!(induced.dim(), 1);
        assert_eq!(induced.len(), 1);
        assert!(induced.hyperplanes()[0].contains(&[rat(0, 1)]));
    }

    #[test]
    fn induced_on_braid_plane() {
        let a = Arrangement::braid(3);
        let plane =
            Flat::from_hyperplane(&Hyperplane::from_ints(&[1, -1, 0], 0).unwrap(), 3);
        let induced = a.induced_arrangement(&plane);
        // x1=x3 and x2=x3 restrict to the same line inside x1=x2
        assert_eq!(induced.dim(), 2);
        assert_eq!(induced.len(), 1);
    }

    #[test]
    fn induced_on_ambient_is_identity() {
        let a = Arrangement::braid(3);
        assert_eq!(a.induced_arrangement(&Flat::ambient(3)), a);
    }

    #[test]
    fn flat_mobius_recursion_sums_vanish() {
        // sum over flats G contained in F of mu(G) is 0 for F below ambient
        let fp = Arrangement::braid(3).flats();
        for f in 1..fp.len() {
            let sum: BigInt = (0..fp.len())
                .filter(|&g| fp.flats()[g].contains_flat(&fp.flats()[f]))
                .map(|g| fp.mobius(g).clone())
                .sum();
            assert_eq!(sum, big(0));
        }
    }

    #[test]
    fn parse_arrangement_text() {
        let text = "2\n1 0 0\n0 1 0\n1 1 1\n";
        let a = Arrangement::parse(text).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.len(), 3);
        assert!(Arrangement::parse("2\n0 0 1\n").is_err());
        assert!(Arrangement::parse("2\n1 0\n").is_err());
    }

    #[test]
    fn duplicate_hyperplanes_are_removed() {
        let a = Arrangement::new(
            2,
            vec![
                Hyperplane::from_ints(&[1, 1], 2).unwrap(),
                Hyperplane::from_ints(&[2, 2], 4).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(a.len(), 1);
    }
}
