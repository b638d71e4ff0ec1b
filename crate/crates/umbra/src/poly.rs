//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored by ascending degree and kept normalized: the
//! highest stored coefficient is nonzero, and the zero polynomial stores
//! nothing.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::rational::{rat_int, Rat};

/// A polynomial over the rationals, `coeffs[k]` multiplying `x^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// A constant polynomial.
    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::monomial(1, Rat::one())
    }

    /// The monomial `c·x^degree`.
    pub fn monomial(degree: usize, c: Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); degree + 1];
        coeffs[degree] = c;
        Self { coeffs }
    }

    /// Builds a polynomial from ascending-degree coefficients, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Test helper: polynomial from small integer coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// Ascending-degree coefficients (normalized, no trailing zeros).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the stored degree.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat_int(k as i64))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Multiplication by `x` (degree shift).
    pub fn mul_x(&self) -> Polynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rat::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
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

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{} x", mag)?,
                (_, true) => write!(f, "x^{}", k)?,
                (_, false) => write!(f, "{} x^{}", mag, k)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn normalization_trims_trailing_zeros() {
        let p = Polynomial::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p, Polynomial::from_i64(&[1, 2]));
        assert!(Polynomial::from_i64(&[0, 0]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = Polynomial::from_i64(&[1, 0, 1]); // x^2 + 1
        let b = Polynomial::from_i64(&[3, 2]); // 2x + 3
        assert_eq!(&a + &b, Polynomial::from_i64(&[4, 2, 1]));
        assert_eq!(&a - &a, Polynomial::zero());
        // (x + 1)(x - 1) = x^2 - 1
        let p = Polynomial::from_i64(&[1, 1]);
        let q = Polynomial::from_i64(&[-1, 1]);
        assert_eq!(&p * &q, Polynomial::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn eval_and_derivative() {
        let p = Polynomial::from_i64(&[1, -2, 3]); // 3x^2 - 2x + 1
        assert_eq!(p.eval(&rat_int(2)), rat_int(9));
        assert_eq!(p.eval(&rat(1, 2)), rat(3, 4));
        assert_eq!(p.derivative(), Polynomial::from_i64(&[-2, 6]));
        assert_eq!(Polynomial::one().derivative(), Polynomial::zero());
    }

    #[test]
    fn mul_x_shifts() {
        let p = Polynomial::from_i64(&[2, 3]);
        assert_eq!(p.mul_x(), Polynomial::from_i64(&[0, 2, 3]));
        assert!(Polynomial::zero().mul_x().is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_i64(&[0, -1, 0, 1]).to_string(), "x^3 - x");
        assert_eq!(Polynomial::from_i64(&[1, 2, 1]).to_string(), "x^2 + 2 x + 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        let half_sq = Polynomial::from_coeffs(vec![rat_int(0), rat_int(0), rat(1, 2)]);
        assert_eq!(half_sq.to_string(), "1/2 x^2");
    }
}
