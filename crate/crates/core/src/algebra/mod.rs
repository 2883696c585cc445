//! Exact univariate algebra over the rationals: polynomials, quasipolynomials,
//! and rational generating functions with denominators of the form
//! `(1-z^{e_1}) ... (1-z^{e_k})`.
//!
//! Coefficients are arbitrary-precision rationals ([`Rational`]); counting
//! values are arbitrary-precision integers. No floating point is used
//! anywhere, so every identity in this crate is checked exactly.

mod gf;
mod polynomial;
mod quasipolynomial;

pub use gf::RationalGF;
pub use polynomial::Polynomial;
pub use quasipolynomial::Quasipolynomial;

use crate::error::{Error, Result};
use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;

/// Shorthand for the rational `p/q`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"` into a rational in lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = |msg: &str| Error::Parse {
        line: 0,
        msg: format!("{msg}: {s:?}"),
    };
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err("bad numerator"))?;
        let d: BigInt = den.trim().parse().map_err(|_| err("bad denominator"))?;
        if d == BigInt::from(0) {
            return Err(err("zero denominator"));
        }
        Ok(Rational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| err("bad integer"))?;
        Ok(Rational::from_integer(n))
    }
}

/// Formats a rational as `"p"` or `"p/q"` in lowest terms.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Binomial coefficient as a big integer (`0` when `k > n`).
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_and_format() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), rat(-4, 1));
        assert_eq!(parse_rational("2/-4").unwrap(), rat(-1, 2));
        assert_eq!(format_rational(&rat(-1, 2)), "-1/2");
        assert_eq!(format_rational(&rat(8, 4)), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }
}
