//! Rational generating functions `N(z) / ((1-z^{e_1}) ... (1-z^{e_k}))`.
//!
//! Canonical form: denominator exponents sorted ascending, and the numerator
//! is not exactly divisible by any `(1-z^e)` still present in the denominator.
//! Semantic equality across different denominator presentations goes through
//! [`RationalGF::equivalent`], which cross-multiplies exactly.

use super::{Polynomial, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    numerator: Polynomial,
    /// Multiset `{e_1, ..., e_k}` encoding the product of `(1 - z^{e_i})`.
    den_exponents: Vec<u32>,
}

fn one_minus_z_pow(e: u32) -> Polynomial {
    let mut coeffs = vec![Rational::zero(); e as usize + 1];
    coeffs[0] = Rational::one();
    coeffs[e as usize] = -Rational::one();
    Polynomial::from_coeffs(coeffs)
}

impl RationalGF {
    /// Builds the generating function and reduces it to canonical form.
    pub fn new(numerator: Polynomial, mut den_exponents: Vec<u32>) -> Self {
        assert!(
            den_exponents.iter().all(|&e| e > 0),
            "denominator exponents must be positive"
        );
        den_exponents.sort_unstable();
        let mut gf = RationalGF {
            numerator,
            den_exponents,
        };
        gf.canonicalize();
        gf
    }

    pub fn zero() -> Self {
        RationalGF {
            numerator: Polynomial::zero(),
            den_exponents: Vec::new(),
        }
    }

    pub fn one() -> Self {
        RationalGF {
            numerator: Polynomial::one(),
            den_exponents: Vec::new(),
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalGF {
            numerator: p,
            den_exponents: Vec::new(),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn den_exponents(&self) -> &[u32] {
        &self.den_exponents
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn canonicalize(&mut self) {
        if self.numerator.is_zero() {
            self.den_exponents.clear();
            return;
        }
        loop {
            let mut reduced = false;
            for i in 0..self.den_exponents.len() {
                let factor = one_minus_z_pow(self.den_exponents[i]);
                if let Some(q) = self.numerator.divide_exact(&factor) {
                    self.numerator = q;
                    self.den_exponents.remove(i);
                    reduced = true;
                    break;
                }
            }
            if !reduced {
                break;
            }
        }
    }

    fn exponent_multiset(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &e in &self.den_exponents {
            *m.entry(e).or_insert(0) += 1;
        }
        m
    }

    /// Exact sum over the least common denominator (multiplicity-wise max of
    /// the two exponent multisets).
    pub fn add(&self, other: &RationalGF) -> RationalGF {
        let a = self.exponent_multiset();
        let b = other.exponent_multiset();
        let mut union = a.clone();
        for (&e, &m) in &b {
            let slot = union.entry(e).or_insert(0);
            *slot = (*slot).max(m);
        }
        let mut den = Vec::new();
        let mut num_a = self.numerator.clone();
        let mut num_b = other.numerator.clone();
        for (&e, &m) in &union {
            den.extend(std::iter::repeat_n(e, m));
            let factor = one_minus_z_pow(e);
            for _ in a.get(&e).copied().unwrap_or(0)..m {
                num_a = &num_a * &factor;
            }
            for _ in b.get(&e).copied().unwrap_or(0)..m {
                num_b = &num_b * &factor;
            }
        }
        RationalGF::new(&num_a + &num_b, den)
    }

    pub fn mul(&self, other: &RationalGF) -> RationalGF {
        let mut den = self.den_exponents.clone();
        den.extend_from_slice(&other.den_exponents);
        RationalGF::new(&self.numerator * &other.numerator, den)
    }

    /// Multiplies by the monomial `c * z^k`.
    pub fn scaled_by_monomial(&self, c: &Rational, k: usize) -> RationalGF {
        RationalGF::new(
            &self.numerator * &Polynomial::monomial(c.clone(), k),
            self.den_exponents.clone(),
        )
    }

    /// Maclaurin coefficients of `z^0 .. z^n`, computed exactly by polynomial
    /// long division. Panics if a coefficient is not an integer (every
    /// generating function in this crate has an integer series).
    pub fn series_prefix(&self, n: usize) -> Vec<BigInt> {
        let mut coeffs: Vec<Rational> = (0..=n).map(|i| self.numerator.coeff(i)).collect();
        for &e in &self.den_exponents {
            let e = e as usize;
            for t in e..=n {
                let prev = coeffs[t - e].clone();
                coeffs[t] += prev;
            }
        }
        coeffs
            .into_iter()
            .map(|c| {
                assert!(c.is_integer(), "series coefficient is not an integer");
                c.to_integer()
            })
            .collect()
    }

    /// The substitution `z -> 1/z`, rewritten over the same denominator
    /// `(1-z^{e_1}) ... (1-z^{e_k})`. With `E = e_1 + ... + e_k` and numerator
    /// `N` of degree `m <= E`, the result has numerator
    /// `(-1)^k * z^(E-m) * rev(N)` where `rev` reverses coefficients.
    /// Applying it twice returns the canonical original.
    pub fn reciprocal(&self) -> Result<RationalGF> {
        if self.is_zero() {
            return Ok(RationalGF::zero());
        }
        let total: u32 = self.den_exponents.iter().sum();
        let deg = self.numerator.degree().unwrap();
        if (total as usize) < deg {
            return Err(Error::Precondition(format!(
                "numerator degree {deg} exceeds denominator exponent sum {total}; \
                 the reciprocal is not representable over the same denominator"
            )));
        }
        let shift = total as usize - deg;
        let sign = if self.den_exponents.len().is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        };
        let num = &self.numerator.reversed() * &Polynomial::monomial(sign, shift);
        Ok(RationalGF::new(num, self.den_exponents.clone()))
    }

    /// Equality as rational functions: cross-multiplies and compares exactly.
    pub fn equivalent(&self, other: &RationalGF) -> bool {
        let mut lhs = self.numerator.clone();
        for &e in &other.den_exponents {
            lhs = &lhs * &one_minus_z_pow(e);
        }
        let mut rhs = other.numerator.clone();
        for &e in &self.den_exponents {
            rhs = &rhs * &one_minus_z_pow(e);
        }
        lhs == rhs
    }

    /// JSON form `{"num": ["c0", "c1", ...], "den": [e_1, ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "num": self.numerator.to_json(),
            "den": self.den_exponents,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<RationalGF> {
        let bad = |msg: &str| Error::Parse {
            line: 0,
            msg: msg.to_string(),
        };
        let num = Polynomial::from_json(v.get("num").ok_or_else(|| bad("missing \"num\""))?)?;
        let den_arr = v
            .get("den")
            .and_then(|d| d.as_array())
            .ok_or_else(|| bad("missing \"den\" array"))?;
        let mut den = Vec::with_capacity(den_arr.len());
        for e in den_arr {
            let e = e
                .as_u64()
                .filter(|&e| e > 0)
                .ok_or_else(|| bad("denominator exponents must be positive integers"))?;
            den.push(e as u32);
        }
        Ok(RationalGF::new(num, den))
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator.display_with("z");
        if self.den_exponents.is_empty() {
            return write!(f, "{num}");
        }
        let mut den = String::new();
        for (&e, &m) in &self.exponent_multiset() {
            let factor = if e == 1 {
                "(1-z)".to_string()
            } else {
                format!("(1-z^{e})")
            };
            den.push_str(&factor);
            if m > 1 {
                den.push_str(&format!("^{m}"));
            }
        }
        let terms = self.numerator.coeffs().iter().filter(|c| !c.is_zero()).count();
        if terms <= 1 {
            write!(f, "{num} / {den}")
        } else {
            write!(f, "({num}) / {den}")
        }
    }
}
