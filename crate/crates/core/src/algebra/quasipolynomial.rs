//! Quasipolynomials: one polynomial constituent per residue class modulo a
//! fixed period. The period is stored explicitly and never inferred; it need
//! not be minimal.

use super::{Polynomial, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quasipolynomial {
    period: usize,
    /// `constituents[k]` applies to arguments `t` with `t = k (mod period)`.
    constituents: Vec<Polynomial>,
}

impl Quasipolynomial {
    /// Panics unless there is exactly one constituent per residue class.
    pub fn new(period: usize, constituents: Vec<Polynomial>) -> Self {
        assert!(period >= 1, "period must be positive");
        assert_eq!(constituents.len(), period, "one constituent per residue");
        Quasipolynomial {
            period,
            constituents,
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Quasipolynomial::new(1, vec![p])
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn constituents(&self) -> &[Polynomial] {
        &self.constituents
    }

    pub fn constituent(&self, residue: usize) -> &Polynomial {
        &self.constituents[residue % self.period]
    }

    pub fn is_polynomial(&self) -> bool {
        self.period == 1 || self.constituents.iter().all(|c| c == &self.constituents[0])
    }

    /// Largest constituent degree; `None` if all constituents are zero.
    pub fn degree(&self) -> Option<usize> {
        self.constituents.iter().filter_map(|c| c.degree()).max()
    }

    /// Evaluation at any integer, negative arguments included: the residue is
    /// taken Euclidean so `t = -1` uses the constituent for `period - 1`.
    pub fn eval_int(&self, t: &BigInt) -> Rational {
        let residue = t
            .mod_floor(&BigInt::from(self.period))
            .to_usize()
            .expect("residue fits usize");
        self.constituents[residue].eval_int(t)
    }

    /// Integer-valued evaluation; panics if the value is not an integer.
    pub fn eval_integer(&self, t: &BigInt) -> BigInt {
        let v = self.eval_int(t);
        assert!(
            v.is_integer(),
            "quasipolynomial value at {t} is not an integer"
        );
        v.to_integer()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "period": self.period,
            "constituents": self.constituents.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Quasipolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.constituents[0]);
        }
        for (r, c) in self.constituents.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "t = {r} (mod {}): {c}", self.period)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn euclidean_residue_at_negative_arguments() {
        // floor(t/2) + 1 = t/2 + 1 (t even), (t+1)/2 (t odd)
        let even = Polynomial::from_coeffs(vec![rat(1, 1), rat(1, 2)]);
        let odd = Polynomial::from_coeffs(vec![rat(1, 2), rat(1, 2)]);
        let q = Quasipolynomial::new(2, vec![even, odd]);
        assert_eq!(q.eval_integer(&BigInt::from(4)), BigInt::from(3));
        assert_eq!(q.eval_integer(&BigInt::from(5)), BigInt::from(3));
        // -1 = 1 (mod 2), -2 = 0 (mod 2)
        assert_eq!(q.eval_integer(&BigInt::from(-1)), BigInt::from(0));
        assert_eq!(q.eval_integer(&BigInt::from(-2)), BigInt::from(0));
    }

    #[test]
    fn period_one_degenerates_to_polynomial() {
        let q = Quasipolynomial::from_polynomial(Polynomial::from_int_coeffs(&[1, 1]));
        assert!(q.is_polynomial());
        assert_eq!(q.eval_integer(&BigInt::from(7)), BigInt::from(8));
    }
}
