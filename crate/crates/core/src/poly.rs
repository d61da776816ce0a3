use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

use crate::{Error, Result};

/// Exact polynomial in `X` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    // coeffs[d] is the coefficient of X^d; no trailing zeros
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, degree: u32) -> Self {
        let mut coeffs = alloc::vec![0; degree as usize + 1];
        coeffs[degree as usize] = coeff;
        Self::from_dense(coeffs)
    }

    /// `1 + X^d`.
    pub fn one_plus_x_pow(d: u32) -> Self {
        Self::one() + Self::monomial(1, d)
    }

    pub fn from_dense(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, i64)>) -> Self {
        let mut coeffs = Vec::new();
        for (d, c) in terms {
            let d = d as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] += c;
        }
        Self::from_dense(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.len().checked_sub(1).map(|d| d as u32)
    }

    /// Lowest degree with a non-zero coefficient.
    pub fn min_degree(&self) -> Option<u32> {
        self.coeffs.iter().position(|&c| c != 0).map(|d| d as u32)
    }

    pub fn coeff(&self, degree: u32) -> i64 {
        self.coeffs.get(degree as usize).copied().unwrap_or(0)
    }

    /// Non-zero `(degree, coefficient)` pairs in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(d, &c)| (d as u32, c))
    }

    pub fn to_map(&self) -> BTreeMap<u32, i64> {
        self.terms().collect()
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn scale(&self, factor: i64) -> Self {
        Self::from_dense(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Quotient and remainder by a divisor with leading coefficient `±1`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or_else(|| Error::OutOfDomain("division by zero".into()))? as usize;
        let lead = divisor.coeffs[dd];
        if lead.abs() != 1 {
            return Err(Error::OutOfDomain("divisor must have unit leading coefficient".into()));
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = alloc::vec![0i64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd] * lead;
            quot[i] = c;
            if c != 0 {
                for (j, &dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= c * dc;
                }
            }
        }
        Ok((Self::from_dense(quot), Self::from_dense(rem)))
    }

    /// Division that must leave no remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }

    /// Sum of the coefficients, i.e. the total dimension when the polynomial
    /// is a Poincaré series.
    pub fn total(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

impl Add for IntPolynomial {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = alloc::vec![0i64; len];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[d] += c;
        }
        for (d, c) in rhs.coeffs.iter().enumerate() {
            coeffs[d] += c;
        }
        Self::from_dense(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = alloc::vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_dense(coeffs)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl core::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| acc * p)
    }
}

/// Renders as `1 + X^5`, `X^2 + X^3`, `2X^4 - X`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.terms().enumerate() {
            let abs = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else if c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match (d, abs) {
                (0, a) => write!(f, "{a}")?,
                (1, 1) => f.write_str("X")?,
                (1, a) => write!(f, "{a}X")?,
                (d, 1) => write!(f, "X^{d}")?,
                (d, a) => write!(f, "{a}X^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn exact_division() {
        let num = IntPolynomial::one_plus_x_pow(1) * IntPolynomial::one_plus_x_pow(5);
        let q = num.div_exact(&IntPolynomial::one_plus_x_pow(1)).unwrap();
        assert_eq!(q, IntPolynomial::one_plus_x_pow(5));
        assert_eq!(
            IntPolynomial::one_plus_x_pow(2).div_exact(&IntPolynomial::one_plus_x_pow(1)),
            Err(Error::InexactDivision)
        );
    }

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::one_plus_x_pow(5).to_string(), "1 + X^5");
        assert_eq!(IntPolynomial::from_terms([(2, 1), (3, 1)]).to_string(), "X^2 + X^3");
        assert_eq!(IntPolynomial::from_terms([(1, -1), (4, 2)]).to_string(), "-X + 2X^4");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn product_and_degrees() {
        let a = IntPolynomial::from_terms([(2, 1), (3, 1)]);
        let sq = &a * &a;
        assert_eq!(sq, IntPolynomial::from_terms([(4, 1), (5, 2), (6, 1)]));
        assert_eq!(sq.min_degree(), Some(4));
        assert_eq!(sq.degree(), Some(6));
        assert_eq!(sq.total(), 4);
        assert_eq!(sq.eval(1), 4);
    }
}
