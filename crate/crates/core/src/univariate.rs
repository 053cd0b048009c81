//! Dense univariate polynomials over `Q`, used for Hilbert polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial `c_0 + c_1 x + ... + c_k x^k` with exact rational
/// coefficients. The coefficient vector never carries trailing zeros, so the
/// zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        QPoly::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        let coeffs = (0..n)
            .map(|k| self.coeffs.get(k).unwrap_or(&zero) + other.coeffs.get(k).unwrap_or(&zero))
            .collect();
        QPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, at: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_int(&self, at: &BigInt) -> BigRational {
        self.eval(&BigRational::from_integer(at.clone()))
    }

    pub fn eval_i64(&self, at: i64) -> BigRational {
        self.eval_int(&BigInt::from(at))
    }

    /// Evaluates at an integer and insists the value is an integer, which is
    /// the case for every numerical polynomial this crate builds.
    pub fn eval_integer(&self, at: i64) -> BigInt {
        let v = self.eval_i64(at);
        assert!(v.is_integer(), "polynomial {self} is not integer-valued at {at}");
        v.to_integer()
    }

    /// `p(x + shift)`.
    pub fn shift(&self, shift: i64) -> QPoly {
        let lin = QPoly::from_coeffs(vec![BigRational::from_integer(shift.into()), BigRational::one()]);
        self.compose_linear(&lin)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> QPoly {
        QPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    fn compose_linear(&self, lin: &QPoly) -> QPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(QPoly::zero(), |acc, c| acc.mul(lin).add(&QPoly::constant(c.clone())))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
                if k > 0 {
                    f.write_str("*")?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn shift_and_reflect() {
        // (x+1)^2 = x^2 + 2x + 1
        let p = QPoly::from_int_coeffs(&[0, 0, 1]).shift(1);
        assert_eq!(p, QPoly::from_int_coeffs(&[1, 2, 1]));
        assert_eq!(p.reflect(), QPoly::from_int_coeffs(&[1, -2, 1]));
        assert_eq!(p.eval(&q(-1)), q(0));
    }

    #[test]
    fn trailing_zeros_are_dropped() {
        let p = QPoly::from_int_coeffs(&[3, 0, 0]);
        assert_eq!(p.degree(), Some(0));
        assert!(QPoly::from_int_coeffs(&[0, 0]).is_zero());
        assert_eq!(QPoly::zero().degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(QPoly::from_int_coeffs(&[2, -1, 1]).to_string(), "x^2 - x + 2");
        assert_eq!(QPoly::from_int_coeffs(&[0, -3]).to_string(), "-3*x");
    }
}
