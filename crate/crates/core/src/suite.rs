//! Seeded random instance generators and the named verification suites that
//! exercise every reciprocity identity in the crate on random inputs.
//!
//! Each suite returns one [`CheckResult`] per check; a failed check carries a
//! minimal witness (the instance and value that broke it). Everything is
//! deterministic given the seed.

use crate::algebra::{Polynomial, Rational};
use crate::arrangement::{Arrangement, Hyperplane};
use crate::graph_coloring::{
    acyclic_orientations, chromatic_polynomial, coloring_reciprocity_check, compatible_pairs,
    graphical_arrangement, proper_colorings_brute, Graph,
};
use crate::lattice_geometry::{
    ehrhart, ehrhart_reciprocity_check, ehrhart_series, euler_characteristic, face_lattice,
    normalized_volume, regular_triangulation, triangulation_mobius_check, Point, Polytope,
    Simplex,
};
use crate::poset::Poset;
use crate::ppartition::{
    cell_decomposition_check, ppartition_count, ppartition_gf, stanley_reciprocity_check,
    PPartitionSpec,
};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    Zaslavsky,
    Ehrhart,
    Chromatic,
    Ppartition,
    Euler,
    All,
}

impl FromStr for SuiteName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "zaslavsky" => Ok(SuiteName::Zaslavsky),
            "ehrhart" => Ok(SuiteName::Ehrhart),
            "chromatic" => Ok(SuiteName::Chromatic),
            "ppartition" => Ok(SuiteName::Ppartition),
            "euler" => Ok(SuiteName::Euler),
            "all" => Ok(SuiteName::All),
            other => Err(format!(
                "unknown suite {other:?}; expected zaslavsky, ehrhart, chromatic, ppartition, euler or all"
            )),
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SuiteName::Zaslavsky => "zaslavsky",
            SuiteName::Ehrhart => "ehrhart",
            SuiteName::Chromatic => "chromatic",
            SuiteName::Ppartition => "ppartition",
            SuiteName::Euler => "euler",
            SuiteName::All => "all",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteSize {
    Tiny,
    Small,
    Medium,
}

impl SuiteSize {
    fn instances(self) -> usize {
        match self {
            SuiteSize::Tiny => 3,
            SuiteSize::Small => 8,
            SuiteSize::Medium => 20,
        }
    }
}

impl FromStr for SuiteSize {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "tiny" => Ok(SuiteSize::Tiny),
            "small" => Ok(SuiteSize::Small),
            "medium" => Ok(SuiteSize::Medium),
            other => Err(format!(
                "unknown size {other:?}; expected tiny, small or medium"
            )),
        }
    }
}

impl fmt::Display for SuiteSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SuiteSize::Tiny => "tiny",
            SuiteSize::Small => "small",
            SuiteSize::Medium => "medium",
        };
        f.write_str(s)
    }
}

/// Outcome of one named check; failures carry a witness.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl CheckResult {
    fn of(name: impl Into<String>, passed: bool, witness: impl FnOnce() -> String) -> CheckResult {
        CheckResult {
            name: name.into(),
            passed,
            witness: if passed { None } else { Some(witness()) },
        }
    }
}

pub fn run_suite(name: SuiteName, seed: u64, size: SuiteSize) -> Vec<CheckResult> {
    match name {
        SuiteName::Zaslavsky => zaslavsky_suite(seed, size),
        SuiteName::Ehrhart => ehrhart_suite(seed, size),
        SuiteName::Chromatic => chromatic_suite(seed, size),
        SuiteName::Ppartition => ppartition_suite(seed, size),
        SuiteName::Euler => euler_suite(seed, size),
        SuiteName::All => {
            let mut out = zaslavsky_suite(seed, size);
            out.extend(ehrhart_suite(seed, size));
            out.extend(chromatic_suite(seed, size));
            out.extend(ppartition_suite(seed, size));
            out.extend(euler_suite(seed, size));
            out
        }
    }
}

// ---------------------------------------------------------------------------
// seeded generators

/// Arrangement with 1..=max_hyperplanes random small-integer hyperplanes.
pub fn random_arrangement(rng: &mut ChaCha8Rng, dim: usize, max_hyperplanes: usize) -> Arrangement {
    let count = rng.gen_range(1..=max_hyperplanes);
    let mut hyperplanes = Vec::new();
    while hyperplanes.len() < count {
        let normal: Vec<i64> = (0..dim).map(|_| rng.gen_range(-3..=3)).collect();
        if normal.iter().all(|&c| c == 0) {
            continue;
        }
        let offset = rng.gen_range(-2..=2);
        hyperplanes.push(Hyperplane::from_ints(&normal, offset).unwrap());
    }
    Arrangement::new(dim, hyperplanes).unwrap()
}

/// `n` hyperplanes in general position in `R^d`: every subset of up to `d`
/// normals is independent and no `d+1` hyperplanes share a point. Rejection
/// sampling over small integer coefficients.
pub fn random_general_position_arrangement(
    rng: &mut ChaCha8Rng,
    n: usize,
    d: usize,
) -> Arrangement {
    'outer: loop {
        let mut hyperplanes = Vec::new();
        for _ in 0..n {
            loop {
                let normal: Vec<i64> = (0..d).map(|_| rng.gen_range(-5..=5)).collect();
                if normal.iter().any(|&c| c != 0) {
                    hyperplanes.push(Hyperplane::from_ints(&normal, rng.gen_range(-5..=5)).unwrap());
                    break;
                }
            }
        }
        let arrangement = match Arrangement::new(d, hyperplanes) {
            Ok(a) if a.len() == n => a,
            _ => continue,
        };
        // ranks of all subsets up to size d
        let hs = arrangement.hyperplanes();
        for mask in 1u32..(1 << n) {
            let k = mask.count_ones() as usize;
            if k > d + 1 {
                continue;
            }
            let rows: Vec<Vec<Rational>> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| {
                    let mut row = hs[i].normal().to_vec();
                    row.push(hs[i].offset().clone());
                    row
                })
                .collect();
            if k <= d {
                let normals: Vec<Vec<Rational>> =
                    rows.iter().map(|r| r[..d].to_vec()).collect();
                if crate::linalg::rank(&normals) != k {
                    continue 'outer;
                }
            } else if crate::linalg::canonical_affine_system(rows).is_some() {
                continue 'outer; // d+1 hyperplanes meeting in a point
            }
        }
        return arrangement;
    }
}

/// Full-dimensional lattice polytope with coordinates in [-3, 3].
pub fn random_lattice_polytope(rng: &mut ChaCha8Rng, dim: usize) -> Polytope {
    loop {
        let count = rng.gen_range(dim + 1..=dim + 4);
        let points: Vec<Point> = (0..count)
            .map(|_| {
                (0..dim)
                    .map(|_| Rational::from_integer(BigInt::from(rng.gen_range(-3..=3))))
                    .collect()
            })
            .collect();
        if let Ok(p) = Polytope::hull(&points) {
            if p.dim() == dim {
                return p;
            }
        }
    }
}

/// Full-dimensional lattice simplex with coordinates in [-3, 3].
pub fn random_lattice_simplex(rng: &mut ChaCha8Rng, dim: usize) -> Simplex {
    loop {
        let points: Vec<Point> = (0..=dim)
            .map(|_| {
                (0..dim)
                    .map(|_| Rational::from_integer(BigInt::from(rng.gen_range(-3..=3))))
                    .collect()
            })
            .collect();
        if let Ok(s) = Simplex::from_points(&points) {
            if s.dim() == dim {
                return s;
            }
        }
    }
}

/// Simple graph where each edge appears with probability 1/2.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Naturally labeled poset: each relation `i` below `j` with `i < j` appears
/// with probability roughly 1/3, then closed transitively.
pub fn random_natural_poset(rng: &mut ChaCha8Rng, d: usize) -> Poset {
    let mut relations = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            if rng.gen_bool(0.35) {
                relations.push((i, j));
            }
        }
    }
    Poset::from_relations(d, &relations).unwrap()
}

// ---------------------------------------------------------------------------
// suites

fn falling_factorial(d: usize) -> Polynomial {
    let mut p = Polynomial::from_int_coeffs(&[0, 1]);
    for j in 1..d {
        p = &p * &Polynomial::from_int_coeffs(&[-(j as i64), 1]);
    }
    p
}

fn power_of_t_minus_one(d: usize) -> Polynomial {
    let mut p = Polynomial::one();
    for _ in 0..d {
        p = &p * &Polynomial::from_int_coeffs(&[-1, 1]);
    }
    p
}

fn factorial_big(d: usize) -> BigInt {
    (1..=d).fold(BigInt::from(1), |acc, k| acc * k)
}

fn zaslavsky_suite(seed: u64, size: SuiteSize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for d in 2..=5usize {
        let braid = Arrangement::braid(d);
        let h = braid.characteristic_polynomial();
        out.push(CheckResult::of(
            format!("zaslavsky/braid-d{d}-characteristic"),
            h == falling_factorial(d),
            || format!("got {h}"),
        ));
        let z = braid.regions_zaslavsky();
        let dr = braid.regions_deletion_restriction();
        let expected = factorial_big(d);
        out.push(CheckResult::of(
            format!("zaslavsky/braid-d{d}-regions"),
            z.as_ref().map(|v| v == &expected).unwrap_or(false) && dr == expected,
            || format!("mobius route {z:?}, deletion-restriction {dr}, expected {expected}"),
        ));
        let boolean = Arrangement::boolean(d);
        let hb = boolean.characteristic_polynomial();
        let zb = boolean.regions_zaslavsky();
        let expected_regions = BigInt::from(1) << d;
        out.push(CheckResult::of(
            format!("zaslavsky/boolean-d{d}"),
            hb == power_of_t_minus_one(d)
                && zb.as_ref().map(|v| v == &expected_regions).unwrap_or(false),
            || format!("characteristic {hb}, regions {zb:?}"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cross_ok = true;
    let mut witness = String::new();
    for i in 0..size.instances() {
        let d = rng.gen_range(1..=4usize);
        let a = random_arrangement(&mut rng, d, 6);
        let z = a.regions_zaslavsky();
        let dr = a.regions_deletion_restriction();
        if z.as_ref().ok() != Some(&dr) {
            cross_ok = false;
            witness = format!("instance {i} in R^{d}: mobius {z:?} vs deletion-restriction {dr}");
            break;
        }
    }
    out.push(CheckResult::of(
        "zaslavsky/random-cross-oracle",
        cross_ok,
        || witness,
    ));
    let mut gp_ok = true;
    let mut gp_witness = String::new();
    for _ in 0..size.instances().min(6) {
        let d = rng.gen_range(2..=3usize);
        let n = rng.gen_range(2..=4usize);
        let a = random_general_position_arrangement(&mut rng, n, d);
        let h = a.characteristic_polynomial();
        let expected = Polynomial::from_coeffs(
            (0..=d)
                .map(|i| {
                    // coefficient of t^i is (-1)^(d-i) binom(n, d-i)
                    let k = d - i;
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    Rational::from_integer(crate::algebra::binomial(n, k) * sign)
                })
                .collect(),
        );
        if h != expected {
            gp_ok = false;
            gp_witness = format!("n={n} d={d}: got {h}, expected {expected}");
            break;
        }
    }
    out.push(CheckResult::of(
        "zaslavsky/general-position-closed-form",
        gp_ok,
        || gp_witness,
    ));
    out
}

fn ehrhart_suite(seed: u64, size: SuiteSize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let triangle = Polytope::standard_simplex(2);
    let qp = ehrhart(&triangle);
    let expected = Polynomial::from_coeffs(vec![
        Rational::new(BigInt::from(1), BigInt::from(1)),
        Rational::new(BigInt::from(3), BigInt::from(2)),
        Rational::new(BigInt::from(1), BigInt::from(2)),
    ]);
    out.push(CheckResult::of(
        "ehrhart/triangle-closed-form",
        qp.period() == 1 && qp.constituent(0) == &expected,
        || format!("got {qp}"),
    ));
    let mut interior_ok = true;
    let mut interior_witness = String::new();
    for t in 1..=10i64 {
        let count = triangle.lattice_count(&BigInt::from(t), true);
        let expected = BigInt::from(((t - 1) * (t - 2)) / 2);
        if count != expected {
            interior_ok = false;
            interior_witness = format!("t={t}: interior {count}, expected {expected}");
            break;
        }
    }
    out.push(CheckResult::of(
        "ehrhart/triangle-interior-values",
        interior_ok,
        || interior_witness,
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rec_ok = true;
    let mut rec_witness = String::new();
    for i in 0..size.instances() {
        let dim = rng.gen_range(1..=3usize);
        let p = random_lattice_polytope(&mut rng, dim);
        if !ehrhart_reciprocity_check(&p, 8) {
            rec_ok = false;
            rec_witness = format!("instance {i}, vertices {:?}", p.vertices());
            break;
        }
    }
    out.push(CheckResult::of(
        "ehrhart/random-reciprocity",
        rec_ok,
        || rec_witness,
    ));

    let mut series_ok = true;
    let mut series_witness = String::new();
    for i in 0..size.instances().min(5) {
        let dim = rng.gen_range(1..=2usize);
        let p = random_lattice_polytope(&mut rng, dim);
        match ehrhart_series(&p) {
            Ok(gf) => {
                let prefix = gf.series_prefix(6);
                for (t, coeff) in prefix.iter().enumerate().skip(1) {
                    if coeff != &p.lattice_count(&BigInt::from(t), false) {
                        series_ok = false;
                        series_witness = format!("instance {i}, t={t}");
                        break;
                    }
                }
            }
            Err(e) => {
                series_ok = false;
                series_witness = format!("instance {i}: {e}");
            }
        }
        if !series_ok {
            break;
        }
    }
    out.push(CheckResult::of(
        "ehrhart/series-prefix-consistency",
        series_ok,
        || series_witness,
    ));

    let mut hv_ok = true;
    let mut hv_witness = String::new();
    for i in 0..size.instances() {
        let dim = 1 + (i % 4);
        let s = random_lattice_simplex(&mut rng, dim);
        let (h, ht) = match s.h_vectors() {
            Ok(v) => v,
            Err(e) => {
                hv_ok = false;
                hv_witness = format!("instance {i}: {e}");
                break;
            }
        };
        for t in 0..=dim + 1 {
            if ht.coeff(t) != h.coeff(dim + 1 - t) {
                hv_ok = false;
                hv_witness = format!("instance {i} dim {dim}: height {t}");
                break;
            }
        }
        if !hv_ok {
            break;
        }
    }
    out.push(CheckResult::of(
        "ehrhart/parallelepiped-reflection",
        hv_ok,
        || hv_witness,
    ));

    let segment = Polytope::hull(&[
        vec![Rational::from_integer(BigInt::from(-1))],
        vec![Rational::from_integer(BigInt::from(2))],
    ])
    .unwrap();
    let series = ehrhart_series(&segment);
    let expected_series = crate::algebra::RationalGF::new(
        Polynomial::from_int_coeffs(&[1, 2]),
        vec![1, 1],
    );
    out.push(CheckResult::of(
        "ehrhart/shifted-segment-series",
        series.as_ref().map(|s| s == &expected_series).unwrap_or(false),
        || format!("got {series:?}"),
    ));
    out
}

fn chromatic_suite(seed: u64, size: SuiteSize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let k3 = Graph::complete(3);
    let c3 = chromatic_polynomial(&k3);
    out.push(CheckResult::of(
        "chromatic/k3-values",
        c3 == Polynomial::from_int_coeffs(&[0, 2, -3, 1])
            && c3.eval_integer(&BigInt::from(-1)) == BigInt::from(-6)
            && acyclic_orientations(&k3).len() == 6,
        || format!("got {c3}"),
    ));
    let c4 = Graph::cycle(4);
    out.push(CheckResult::of(
        "chromatic/c4-orientations",
        acyclic_orientations(&c4).len() == 14,
        || format!("got {}", acyclic_orientations(&c4).len()),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acyclic_ok = true;
    let mut acyclic_witness = String::new();
    for i in 0..size.instances() {
        let n = rng.gen_range(2..=6usize);
        let g = random_graph(&mut rng, n);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let value = chromatic_polynomial(&g).eval_integer(&BigInt::from(-1)) * sign;
        if BigInt::from(acyclic_orientations(&g).len()) != value {
            acyclic_ok = false;
            acyclic_witness = format!("instance {i}: {:?}", g.edges());
            break;
        }
    }
    out.push(CheckResult::of(
        "chromatic/acyclic-count-identity",
        acyclic_ok,
        || acyclic_witness,
    ));

    let mut regions_ok = true;
    let mut regions_witness = String::new();
    for i in 0..size.instances() {
        let n = rng.gen_range(2..=5usize);
        let g = random_graph(&mut rng, n);
        let a = graphical_arrangement(&g);
        let expected = BigInt::from(acyclic_orientations(&g).len());
        let z = a.regions_zaslavsky();
        let dr = a.regions_deletion_restriction();
        if z.as_ref().ok() != Some(&expected) || dr != expected {
            regions_ok = false;
            regions_witness =
                format!("instance {i}: {:?}, regions {z:?}/{dr}, expected {expected}", g.edges());
            break;
        }
    }
    out.push(CheckResult::of(
        "chromatic/greene-region-bijection",
        regions_ok,
        || regions_witness,
    ));

    let mut pairs_ok = true;
    let mut pairs_witness = String::new();
    for i in 0..size.instances() {
        let n = rng.gen_range(2..=5usize);
        let g = random_graph(&mut rng, n);
        let c = chromatic_polynomial(&g);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        for t in 1..=4u32 {
            let pairs = compatible_pairs(&g, t);
            let expected = c.eval_integer(&BigInt::from(-(t as i64))) * sign;
            if pairs != expected {
                pairs_ok = false;
                pairs_witness = format!(
                    "instance {i}: {:?} at t={t}: pairs {pairs}, expected {expected}",
                    g.edges()
                );
                break;
            }
        }
        if !pairs_ok {
            break;
        }
    }
    out.push(CheckResult::of(
        "chromatic/compatible-pairs-identity",
        pairs_ok,
        || pairs_witness,
    ));

    let mut colorings_ok = true;
    let mut colorings_witness = String::new();
    for i in 0..size.instances() {
        let n = rng.gen_range(2..=5usize);
        let g = random_graph(&mut rng, n);
        let c = chromatic_polynomial(&g);
        for t in 1..=5u32 {
            if c.eval_integer(&BigInt::from(t)) != proper_colorings_brute(&g, t) {
                colorings_ok = false;
                colorings_witness = format!("instance {i}: {:?} at t={t}", g.edges());
                break;
            }
        }
        if !colorings_ok {
            break;
        }
    }
    out.push(CheckResult::of(
        "chromatic/polynomial-vs-brute-force",
        colorings_ok,
        || colorings_witness,
    ));

    let mut rec_ok = true;
    let mut rec_witness = String::new();
    for i in 0..size.instances().min(5) {
        let n = rng.gen_range(2..=4usize);
        let g = random_graph(&mut rng, n);
        match coloring_reciprocity_check(&g, 3) {
            Ok(true) => {}
            other => {
                rec_ok = false;
                rec_witness = format!("instance {i}: {:?} gave {other:?}", g.edges());
                break;
            }
        }
    }
    out.push(CheckResult::of(
        "chromatic/coloring-reciprocity",
        rec_ok,
        || rec_witness,
    ));
    out
}

fn ppartition_suite(seed: u64, size: SuiteSize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let fork = crate::poset::fork_poset();
    let weak_fork = ppartition_gf(&PPartitionSpec::new(fork.clone(), false));
    let strict_fork = ppartition_gf(&PPartitionSpec::new(fork.clone(), true));
    out.push(CheckResult::of(
        "ppartition/fork-generating-functions",
        weak_fork.equivalent(&crate::algebra::RationalGF::new(
            Polynomial::one(),
            vec![1, 1, 3],
        )) && strict_fork.equivalent(&crate::algebra::RationalGF::new(
            Polynomial::monomial(Rational::from_integer(BigInt::from(1)), 2),
            vec![1, 1, 3],
        )),
        || format!("weak {weak_fork}, strict {strict_fork}"),
    ));
    out.push(CheckResult::of(
        "ppartition/named-posets-reciprocity",
        [Poset::chain(3), Poset::antichain(3), fork]
            .iter()
            .all(|p| stanley_reciprocity_check(p).unwrap_or(false)),
        || "a named poset failed".to_string(),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rec_ok = true;
    let mut rec_witness = String::new();
    for i in 0..size.instances() {
        let d = rng.gen_range(2..=6usize);
        let p = random_natural_poset(&mut rng, d);
        if !stanley_reciprocity_check(&p).unwrap_or(false) {
            rec_ok = false;
            rec_witness = format!("instance {i}: covers {:?}", p.covers());
            break;
        }
    }
    out.push(CheckResult::of(
        "ppartition/random-reciprocity",
        rec_ok,
        || rec_witness,
    ));

    let mut series_ok = true;
    let mut series_witness = String::new();
    for i in 0..size.instances().min(6) {
        let d = rng.gen_range(2..=5usize);
        let p = random_natural_poset(&mut rng, d);
        for strict in [false, true] {
            let spec = PPartitionSpec::new(p.clone(), strict);
            let prefix = ppartition_gf(&spec).series_prefix(12);
            for (t, coeff) in prefix.iter().enumerate() {
                if *coeff != ppartition_count(&spec, t as u32) {
                    series_ok = false;
                    series_witness =
                        format!("instance {i} strict={strict} t={t}: covers {:?}", p.covers());
                    break;
                }
            }
            if !series_ok {
                break;
            }
        }
        if !series_ok {
            break;
        }
    }
    out.push(CheckResult::of(
        "ppartition/series-vs-brute-force",
        series_ok,
        || series_witness,
    ));

    let mut cell_ok = true;
    let mut cell_witness = String::new();
    for i in 0..size.instances().min(6) {
        let d = rng.gen_range(2..=5usize);
        let p = random_natural_poset(&mut rng, d);
        if !cell_decomposition_check(&PPartitionSpec::new(p.clone(), false), 6) {
            cell_ok = false;
            cell_witness = format!("instance {i}: covers {:?}", p.covers());
            break;
        }
    }
    out.push(CheckResult::of(
        "ppartition/cell-decomposition",
        cell_ok,
        || cell_witness,
    ));
    out
}

fn euler_suite(seed: u64, size: SuiteSize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let cube = Polytope::unit_cube(3);
    out.push(CheckResult::of(
        "euler/cube-f-vector",
        face_lattice(&cube)
            .map(|fl| fl.f_vector() == vec![8, 12, 6, 1])
            .unwrap_or(false)
            && euler_characteristic(&cube).map(|e| e == BigInt::from(1)).unwrap_or(false),
        || "cube face counts differ".into(),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut euler_ok = true;
    let mut euler_witness = String::new();
    for i in 0..size.instances() {
        let dim = rng.gen_range(1..=3usize);
        let p = random_lattice_polytope(&mut rng, dim);
        match euler_characteristic(&p) {
            Ok(e) if e == BigInt::from(1) => {}
            other => {
                euler_ok = false;
                euler_witness = format!("instance {i}: got {other:?}");
                break;
            }
        }
    }
    out.push(CheckResult::of(
        "euler/random-characteristic",
        euler_ok,
        || euler_witness,
    ));

    let mut mobius_ok = true;
    let mut mobius_witness = String::new();
    for i in 0..size.instances().min(6) {
        let dim = rng.gen_range(1..=3usize);
        let p = random_lattice_polytope(&mut rng, dim);
        let fl = match face_lattice(&p) {
            Ok(fl) => fl,
            Err(e) => {
                mobius_ok = false;
                mobius_witness = format!("instance {i}: {e}");
                break;
            }
        };
        let poset = fl.poset();
        let table = poset.mobius();
        'pairs: for x in 0..fl.len() {
            for y in 0..fl.len() {
                if poset.le(x, y) {
                    let gap = fl.dims()[y] - fl.dims()[x];
                    let expected = if gap % 2 == 0 {
                        BigInt::from(1)
                    } else {
                        BigInt::from(-1)
                    };
                    if table.mu(x, y) != expected {
                        mobius_ok = false;
                        mobius_witness = format!("instance {i}: pair ({x}, {y})");
                        break 'pairs;
                    }
                }
            }
        }
        if !mobius_ok {
            break;
        }
    }
    out.push(CheckResult::of(
        "euler/face-mobius-closed-form",
        mobius_ok,
        || mobius_witness,
    ));

    let mut tri_ok = true;
    let mut tri_witness = String::new();
    for i in 0..size.instances().min(8) {
        let dim = rng.gen_range(2..=3usize);
        let p = random_lattice_polytope(&mut rng, dim);
        let tri = match regular_triangulation(&p, seed.wrapping_add(i as u64)) {
            Ok(t) => t,
            Err(e) => {
                tri_ok = false;
                tri_witness = format!("instance {i}: {e}");
                break;
            }
        };
        let total = tri.total_normalized_volume();
        let expected = match normalized_volume(&p) {
            Ok(v) => v,
            Err(e) => {
                tri_ok = false;
                tri_witness = format!("instance {i}: {e}");
                break;
            }
        };
        if total != expected {
            tri_ok = false;
            tri_witness = format!("instance {i}: simplex volume {total}, polytope {expected}");
            break;
        }
        if !triangulation_mobius_check(&tri) {
            tri_ok = false;
            tri_witness = format!("instance {i}: face poset");
            break;
        }
    }
    out.push(CheckResult::of(
        "euler/triangulation-volume-and-mobius",
        tri_ok,
        || tri_witness,
    ));

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_on_tiny_size() {
        for name in [
            SuiteName::Zaslavsky,
            SuiteName::Ehrhart,
            SuiteName::Chromatic,
            SuiteName::Ppartition,
            SuiteName::Euler,
        ] {
            let results = run_suite(name, 7, SuiteSize::Tiny);
            assert!(!results.is_empty());
            for r in &results {
                assert!(r.passed, "{name}: {} failed: {:?}", r.name, r.witness);
            }
        }
    }

    #[test]
    fn suite_results_are_deterministic() {
        let a = run_suite(SuiteName::Chromatic, 11, SuiteSize::Tiny);
        let b = run_suite(SuiteName::Chromatic, 11, SuiteSize::Tiny);
        let names_a: Vec<&str> = a.iter().map(|c| c.name.as_str()).collect();
        let names_b: Vec<&str> = b.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names_a, names_b);
        assert!(a.iter().zip(&b).all(|(x, y)| x.passed == y.passed));
    }

    #[test]
    fn names_parse() {
        assert_eq!("all".parse::<SuiteName>().unwrap(), SuiteName::All);
        assert_eq!("EHRHART".parse::<SuiteName>().unwrap(), SuiteName::Ehrhart);
        assert!("bogus".parse::<SuiteName>().is_err());
        assert_eq!("small".parse::<SuiteSize>().unwrap(), SuiteSize::Small);
        assert!("huge".parse::<SuiteSize>().is_err());
    }
}
