//! Laurent polynomials in one variable `A` with integer coefficients.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use crate::Error;

/// Dense coefficients starting at `A^min_exp`; kept trimmed so equal
/// polynomials compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    min_exp: i32,
    coeffs: Vec<i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coef: i64, exp: i32) -> Self {
        Self {
            min_exp: exp,
            coeffs: vec![coef],
        }
        .trimmed()
    }

    /// Sums `(coefficient, exponent)` terms; repeated exponents accumulate.
    pub fn from_terms(terms: &[(i64, i32)]) -> Self {
        let Some(lo) = terms.iter().map(|t| t.1).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.1).max().unwrap_or(lo);
        let mut coeffs = vec![0; (hi - lo) as usize + 1];
        for &(c, e) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self {
            min_exp: lo,
            coeffs,
        }
        .trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            return Self::zero();
        }
        self.coeffs.drain(..lead);
        self.min_exp += lead as i32;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        let i = exp - self.min_exp;
        if i < 0 {
            return 0;
        }
        self.coeffs.get(i as usize).copied().unwrap_or(0)
    }

    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.min_exp)
    }

    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.min_exp + self.coeffs.len() as i32 - 1)
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.min_exp + i as i32, c))
    }

    /// Multiplies by `coef * A^exp`.
    pub fn scale(&self, coef: i64, exp: i32) -> Self {
        Self {
            min_exp: self.min_exp + exp,
            coeffs: self.coeffs.iter().map(|c| c * coef).collect(),
        }
        .trimmed()
    }

    /// `(-A^3)^k`.
    pub fn neg_a_cubed_pow(k: i32) -> Self {
        Self::monomial(if k % 2 == 0 { 1 } else { -1 }, 3 * k)
    }

    /// Replaces `A` by `A^-1`.
    pub fn mirror(&self) -> Self {
        let terms: Vec<(i64, i32)> = self.terms().map(|(e, c)| (c, -e)).collect();
        Self::from_terms(&terms)
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        if self.is_zero() {
            return other.scale(sign, 0);
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(other.min_exp);
        let hi = self.max_exp().unwrap().max(other.max_exp().unwrap());
        let mut coeffs = vec![0; (hi - lo) as usize + 1];
        for (e, c) in self.terms() {
            coeffs[(e - lo) as usize] += c;
        }
        for (e, c) in other.terms() {
            coeffs[(e - lo) as usize] += sign * c;
        }
        Self {
            min_exp: lo,
            coeffs,
        }
        .trimmed()
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> LaurentPolynomial {
        self.combine(rhs, 1)
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: Self) -> LaurentPolynomial {
        self.combine(rhs, -1)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPolynomial {
            min_exp: self.min_exp + rhs.min_exp,
            coeffs,
        }
        .trimmed()
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(-1, 0)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: Self) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

/// Terms by decreasing exponent as `c*A^e`, joined by `+`; zero prints `0`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{c}*A^{e}")?;
        }
        Ok(())
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    /// Inverse of the `Display` format.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut terms = Vec::new();
        for token in s.split('+') {
            let bad = || Error::InvalidToken(token.to_string());
            let (c, e) = token.split_once("*A^").ok_or_else(bad)?;
            terms.push((c.parse().map_err(|_| bad())?, e.parse().map_err(|_| bad())?));
        }
        Ok(Self::from_terms(&terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn arithmetic() {
        let a = LaurentPolynomial::from_terms(&[(1, 2), (-1, -2)]);
        let b = LaurentPolynomial::from_terms(&[(1, 2), (1, -2)]);
        assert_eq!(&a + &b, LaurentPolynomial::monomial(2, 2));
        assert_eq!(&a - &a, LaurentPolynomial::zero());
        assert_eq!(&a * &b, LaurentPolynomial::from_terms(&[(1, 4), (-1, -4)]));
        assert_eq!(
            LaurentPolynomial::neg_a_cubed_pow(-1),
            LaurentPolynomial::monomial(-1, -3)
        );
        assert_eq!(a.mirror(), -&a);
    }

    #[test]
    fn fingerprint_round_trip() {
        let p = LaurentPolynomial::from_terms(&[(-1, 16), (1, 12), (1, 4)]);
        assert_eq!(p.to_string(), "-1*A^16+1*A^12+1*A^4");
        assert_eq!(p.to_string().parse::<LaurentPolynomial>().unwrap(), p);
        let q = LaurentPolynomial::from_terms(&[(3, -2), (-2, -7)]);
        assert_eq!(q.to_string().parse::<LaurentPolynomial>().unwrap(), q);
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(
            "0".parse::<LaurentPolynomial>().unwrap(),
            LaurentPolynomial::zero()
        );
    }
}
