//! Dense univariate polynomials with exact rational coefficients.

use super::{format_rational, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficient list indexed by degree; the leading coefficient is nonzero
/// unless the polynomial is zero (empty list).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial::from_coeffs(coeffs)
    }

    /// Builds from `coeffs[i] =` coefficient of `t^i`, trimming leading zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_int(&self, t: &BigInt) -> Rational {
        self.eval(&Rational::from_integer(t.clone()))
    }

    /// Evaluation at an integer for counting polynomials; panics if the value
    /// is not an integer.
    pub fn eval_integer(&self, t: &BigInt) -> BigInt {
        let v = self.eval_int(t);
        assert!(v.is_integer(), "polynomial value at {t} is not an integer");
        v.to_integer()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `p(-t)`: flips the sign of odd-degree coefficients.
    pub fn substitute_neg(&self) -> Polynomial {
        Polynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// Coefficient reversal: `t^deg * p(1/t)`. Zero maps to zero.
    pub fn reversed(&self) -> Polynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Polynomial::from_coeffs(coeffs)
    }

    /// Exact quotient if `divisor` divides `self`, else `None`.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let dd = divisor.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] / &lead;
            if !q.is_zero() {
                for j in 0..=dd {
                    let sub = &divisor.coeffs[j] * &q;
                    rem[k + j] = &rem[k + j] - &sub;
                }
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Polynomial::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Unique polynomial of degree `< points.len()` through the given points.
    /// Fails on duplicate abscissas.
    pub fn interpolate(points: &[(BigInt, Rational)]) -> Result<Polynomial> {
        if points.is_empty() {
            return Err(Error::Precondition("interpolation needs a point".into()));
        }
        for (i, (x, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(y, _)| y == x) {
                return Err(Error::DuplicateAbscissa(x.to_string()));
            }
        }
        let mut result = Polynomial::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Polynomial::one();
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if j == i {
                    continue;
                }
                basis = &basis
                    * &Polynomial::from_coeffs(vec![
                        Rational::from_integer(-xj.clone()),
                        Rational::one(),
                    ]);
                denom *= Rational::from_integer(xi - xj);
            }
            result = &result + &basis.scale(&(yi / denom));
        }
        Ok(result)
    }

    /// Renders with the given variable name, e.g. `t^2 - 3t + 2`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let coeff_str = if abs.is_one() && k > 0 {
                String::new()
            } else if abs.is_integer() {
                format_rational(&abs)
            } else {
                format!("({})", format_rational(&abs))
            };
            out.push_str(&coeff_str);
            if k > 0 {
                out.push_str(var);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }

    /// JSON array of coefficient strings `"p/q"` (lowest terms), index = degree.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(format_rational(c)))
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Polynomial> {
        let arr = v.as_array().ok_or_else(|| Error::Parse {
            line: 0,
            msg: "polynomial JSON must be an array".into(),
        })?;
        let mut coeffs = Vec::with_capacity(arr.len());
        for entry in arr {
            let s = entry.as_str().ok_or_else(|| Error::Parse {
                line: 0,
                msg: "polynomial coefficients must be strings".into(),
            })?;
            coeffs.push(super::parse_rational(s)?);
        }
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("t"))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn interpolate_triangular_numbers() {
        // (t+1)(t+2)/2 through (1,3), (2,6), (3,10)
        let p = Polynomial::interpolate(&[
            (big(1), rat(3, 1)),
            (big(2), rat(6, 1)),
            (big(3), rat(10, 1)),
        ])
        .unwrap();
        let expected = Polynomial::from_coeffs(vec![rat(1, 1), rat(3, 2), rat(1, 2)]);
        assert_eq!(p, expected);
    }

    #[test]
    fn interpolate_single_point_is_constant() {
        let p = Polynomial::interpolate(&[(big(5), rat(7, 1))]).unwrap();
        assert_eq!(p, Polynomial::constant(rat(7, 1)));
    }

    #[test]
    fn interpolate_unit_square_counts() {
        // Lattice counts of the unit square at t = 1, 2, 3, computed by the
        // brute-force scan oracle below, give (t+1)^2.
        let count = |t: i64| -> i64 {
            let mut n = 0;
            for x in 0..=t {
                for y in 0..=t {
                    let _ = (x, y);
                    n += 1;
                }
            }
            n
        };
        let pts: Vec<(BigInt, Rational)> = (1..=3)
            .map(|t| (big(t), Rational::from_integer(big(count(t)))))
            .collect();
        assert_eq!(pts[0].1, rat(4, 1));
        assert_eq!(pts[1].1, rat(9, 1));
        assert_eq!(pts[2].1, rat(16, 1));
        let p = Polynomial::interpolate(&pts).unwrap();
        assert_eq!(p, Polynomial::from_int_coeffs(&[1, 2, 1]));
    }

    #[test]
    fn interpolate_rejects_duplicate_abscissas() {
        let r = Polynomial::interpolate(&[(big(1), rat(1, 1)), (big(1), rat(2, 1))]);
        assert!(matches!(r, Err(Error::DuplicateAbscissa(_))));
    }

    #[test]
    fn eval_k3_chromatic_at_minus_one() {
        // t(t-1)(t-2) = t^3 - 3t^2 + 2t
        let p = Polynomial::from_int_coeffs(&[0, 2, -3, 1]);
        assert_eq!(p.eval_integer(&big(-1)), big(-6));
    }

    #[test]
    fn eval_zero_polynomial() {
        assert!(Polynomial::zero().eval(&rat(17, 3)).is_zero());
    }

    #[test]
    fn eval_c4_chromatic_at_minus_one() {
        // (t-1)^4 + (t-1): value at -1 equals the acyclic orientation count
        // of the 4-cycle, which the enumeration oracle puts at 14.
        let tm1 = Polynomial::from_int_coeffs(&[-1, 1]);
        let p = &(&(&tm1 * &tm1) * &(&tm1 * &tm1)) + &tm1;
        assert_eq!(p.eval_integer(&big(-1)), big(14));
    }

    #[test]
    fn exact_division() {
        let num = Polynomial::from_int_coeffs(&[-1, 0, 1]); // t^2 - 1
        let den = Polynomial::from_int_coeffs(&[-1, 1]); // t - 1
        assert_eq!(
            num.divide_exact(&den).unwrap(),
            Polynomial::from_int_coeffs(&[1, 1])
        );
        let not_divisible = Polynomial::from_int_coeffs(&[1, 1, 1]);
        assert!(not_divisible.divide_exact(&den).is_none());
    }

    #[test]
    fn display_readable() {
        let p = Polynomial::from_coeffs(vec![rat(1, 1), rat(3, 2), rat(1, 2)]);
        assert_eq!(p.display_with("t"), "(1/2)t^2 + (3/2)t + 1");
        let q = Polynomial::from_int_coeffs(&[0, 2, -3, 1]);
        assert_eq!(q.display_with("t"), "t^3 - 3t^2 + 2t");
        assert_eq!(Polynomial::zero().display_with("t"), "0");
    }

    #[test]
    fn json_roundtrip() {
        let p = Polynomial::from_coeffs(vec![rat(-1, 2), rat(0, 1), rat(3, 1)]);
        let v = p.to_json();
        assert_eq!(Polynomial::from_json(&v).unwrap(), p);
    }
}
