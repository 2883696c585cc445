//! Ehrhart quasipolynomials of rational polytopes, the reciprocity check
//! against interior counts, and exact Ehrhart series.

use super::polytope::Polytope;
use super::simplex::Simplex;
use super::triangulation::regular_triangulation;
use crate::algebra::{binomial, Polynomial, Quasipolynomial, Rational, RationalGF};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

/// Seed for the triangulation used when assembling Ehrhart series of
/// non-simplex polytopes.
const SERIES_TRIANGULATION_SEED: u64 = 1;

/// The lattice-point counting quasipolynomial of a rational polytope. The
/// period is the lcm of the vertex coordinate denominators (not minimized);
/// constituent `r` is interpolated from the counts at
/// `t = r + period, r + 2*period, .., r + (dim+1)*period` and the result is
/// verified against direct counts up to `2 * (dim+1) * period`.
pub fn ehrhart(p: &Polytope) -> Quasipolynomial {
    let period = p
        .vertex_denominator_lcm()
        .to_usize()
        .expect("vertex denominators at desk scale");
    let dim = p.dim();
    let horizon = 2 * (dim + 1) * period;
    let counts: Vec<BigInt> = (1..=horizon)
        .map(|t| p.lattice_count(&BigInt::from(t), false))
        .collect();
    let constituents: Vec<Polynomial> = (0..period)
        .map(|r| {
            let points: Vec<(BigInt, Rational)> = (1..=dim + 1)
                .map(|k| {
                    let t = r + period * k;
                    (
                        BigInt::from(t),
                        Rational::from_integer(counts[t - 1].clone()),
                    )
                })
                .collect();
            Polynomial::interpolate(&points).expect("nodes are distinct")
        })
        .collect();
    let qp = Quasipolynomial::new(period, constituents);
    for (t, expected) in counts.iter().enumerate() {
        let t = t + 1;
        assert_eq!(
            &qp.eval_integer(&BigInt::from(t)),
            expected,
            "interpolated Ehrhart quasipolynomial disagrees with the count at t={t}"
        );
    }
    qp
}

/// Checks `ehr(-t) = (-1)^dim * #(relative interior of t*P)` for
/// `t = 1..=horizon`.
pub fn ehrhart_reciprocity_check(p: &Polytope, horizon: u32) -> bool {
    let qp = ehrhart(p);
    let sign = if p.dim().is_multiple_of(2) { 1 } else { -1 };
    (1..=horizon).all(|t| {
        let lhs = qp.eval_integer(&BigInt::from(-(t as i64)));
        let interior = p.lattice_count(&BigInt::from(t), true);
        lhs == interior * sign
    })
}

/// `dim! *` (leading Ehrhart coefficient): for a full-dimensional lattice
/// polytope this is the normalized volume, a positive integer, computed here
/// by lattice counting alone (independent of any determinant).
pub fn normalized_volume(p: &Polytope) -> Result<BigInt> {
    if !p.is_lattice() {
        return Err(Error::NotLattice);
    }
    let qp = ehrhart(p);
    let poly = qp.constituent(0);
    let mut lead = poly.coeff(p.dim());
    for k in 1..=p.dim() {
        lead *= Rational::from_integer(BigInt::from(k));
    }
    if !lead.is_integer() || !lead.is_positive() {
        return Err(Error::Internal(format!(
            "normalized volume {lead} is not a positive integer"
        )));
    }
    Ok(lead.to_integer())
}

/// The Ehrhart series `1 + sum_(t>0) ehr(t) z^t` of a lattice polytope as an
/// exact rational function with denominator `(1-z)^(dim+1)`.
///
/// Two independent routes are compared: the interpolated Ehrhart polynomial
/// converted termwise, and (for simplices and full-dimensional polytopes) the
/// half-open decomposition `1 + sum over triangulation faces F of
/// h~_F(z)/(1-z)^(dim F + 1)`. A disagreement is an internal error.
pub fn ehrhart_series(p: &Polytope) -> Result<RationalGF> {
    if !p.is_lattice() {
        return Err(Error::NotLattice);
    }
    let d = p.dim();
    let qp = ehrhart(p);
    let poly = qp.constituent(0);

    // Route 1: N_j = sum_i (-1)^i C(d+1, i) ehr(j - i), j = 0..=d.
    let ehr_at = |t: usize| poly.eval_int(&BigInt::from(t));
    let numerator = Polynomial::from_coeffs(
        (0..=d)
            .map(|j| {
                (0..=j.min(d + 1))
                    .map(|i| {
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        Rational::from_integer(binomial(d + 1, i) * sign) * ehr_at(j - i)
                    })
                    .sum()
            })
            .collect(),
    );
    let from_polynomial = RationalGF::new(numerator, vec![1; d + 1]);

    // Route 2: half-open cone decomposition over a triangulation.
    let from_decomposition = if p.vertices().len() == d + 1 {
        Some(Simplex::from_polytope(p.clone())?.ehrhart_series()?)
    } else if d == p.ambient() && d > 0 {
        let tri = regular_triangulation(p, SERIES_TRIANGULATION_SEED)?;
        let mut acc = RationalGF::one();
        for face in tri.faces() {
            let points: Vec<_> = face
                .iter()
                .map(|&i| p.vertices()[i].clone())
                .collect();
            let simplex = Simplex::from_points(&points)?;
            let (_, h_tilde) = simplex.h_vectors()?;
            acc = acc.add(&RationalGF::new(h_tilde, vec![1; simplex.dim() + 1]));
        }
        Some(acc)
    } else {
        None
    };
    if let Some(other) = from_decomposition {
        if !from_polynomial.equivalent(&other) {
            return Err(Error::Internal(format!(
                "Ehrhart series routes disagree: {from_polynomial} vs {other}"
            )));
        }
    }
    Ok(from_polynomial)
}
