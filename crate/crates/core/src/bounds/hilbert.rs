use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::binomial::{poly_binomial, trunc_binomial};
use super::BoundError;
use crate::univariate::QPoly;

/// Hilbert coefficients `(e_0, .., e_{d-1})`. Indices outside `0..d` read as
/// zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertCoefficients {
    e: Vec<BigInt>,
}

impl HilbertCoefficients {
    pub fn new(e: Vec<BigInt>) -> Self {
        HilbertCoefficients { e }
    }

    pub fn from_i64(e: &[i64]) -> Self {
        HilbertCoefficients { e: e.iter().map(|&v| BigInt::from(v)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.e.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.e
    }

    /// `e_i`, with `e_i = 0` for `i` outside `0..d`.
    pub fn get(&self, i: i64) -> BigInt {
        if i < 0 {
            return BigInt::zero();
        }
        self.e.get(i as usize).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(Zero::is_zero)
    }

    /// Reads off the coefficients of `p` in the basis
    /// `(-1)^i binom(x + d-i-1, d-i-1)`, `i = 0..d`. Fails when `p` has degree
    /// `>= d` or the coordinates are not integral.
    pub fn from_poly(p: &QPoly, d: usize) -> Result<Self, BoundError> {
        let mut rest = p.clone();
        let mut e = vec![BigInt::zero(); d];
        for i in 0..d {
            let k = d - i - 1;
            let basis = poly_binomial(k as i64, k);
            let coeff = rest.coeffs().get(k).cloned().unwrap_or_else(BigRational::zero);
            // basis has leading coefficient 1/k!
            let scaled = coeff * factorial(k);
            if !scaled.is_integer() {
                return Err(BoundError::InvalidArgument(format!(
                    "polynomial {p} is not numerical in the binomial basis"
                )));
            }
            rest = rest.sub(&basis.scale(&scaled));
            let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            e[i] = scaled.to_integer() * sign;
        }
        if !rest.is_zero() {
            return Err(BoundError::InvalidArgument(format!(
                "polynomial {p} has degree >= {d}"
            )));
        }
        Ok(HilbertCoefficients { e })
    }
}

fn factorial(k: usize) -> BigRational {
    let mut acc = BigInt::one();
    for j in 2..=k {
        acc *= BigInt::from(j);
    }
    BigRational::from_integer(acc)
}

/// `p_e(x) = sum_i (-1)^i e_i binom(x + d-i-1, d-i-1)`.
pub fn hilbert_poly_of_coeffs(e: &HilbertCoefficients) -> QPoly {
    let d = e.dim();
    let mut acc = QPoly::zero();
    for (i, ei) in e.coeffs().iter().enumerate() {
        if ei.is_zero() {
            continue;
        }
        let k = d - i - 1;
        let mut c = BigRational::from_integer(ei.clone());
        if i % 2 == 1 {
            c = -c;
        }
        acc = acc.add(&poly_binomial(k as i64, k).scale(&c));
    }
    acc
}

/// `H^m_d(e)` with the length of the base ring passed as `lambda`.
///
/// `H^m_2(e_0, e_1) = 1 - p_{(e_0,e_1)}(-1)`, and for `d > 2`, with
/// `f = H^m_{d-1}(e_0, .., e_{d-2})`,
/// `H^m_d(e) = lambda m binom(f+d-3, d-1) - p_e(f-2) + f`.
pub fn eval_h(m: &BigInt, lambda: &BigInt, e: &HilbertCoefficients) -> Result<BigInt, BoundError> {
    let d = e.dim();
    if d < 2 {
        return Err(BoundError::InvalidArgument(format!("H needs d >= 2, got {d}")));
    }
    if !m.is_positive() || !lambda.is_positive() {
        return Err(BoundError::InvalidArgument("H needs m >= 1 and lambda >= 1".into()));
    }
    let p2 = hilbert_poly_of_coeffs(&HilbertCoefficients::new(e.coeffs()[..2].to_vec()));
    let mut f = BigInt::one() - integral(&p2, &BigInt::from(-1));
    for k in 3..=d {
        let prefix = HilbertCoefficients::new(e.coeffs()[..k].to_vec());
        let pe = hilbert_poly_of_coeffs(&prefix);
        let kk = BigInt::from(k);
        let binom = trunc_binomial(&(&f + &kk - 3), &(&kk - 1));
        let at = &f - 2;
        f = lambda * m * binom - integral(&pe, &at) + &f;
    }
    Ok(f)
}

fn integral(p: &QPoly, at: &BigInt) -> BigInt {
    let v = p.eval_int(at);
    debug_assert!(v.is_integer());
    v.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn two_dimensional_expansion() {
        // e_0 (x+1) - e_1
        let p = hilbert_poly_of_coeffs(&HilbertCoefficients::from_i64(&[3, 5]));
        assert_eq!(p, QPoly::from_int_coeffs(&[-2, 3]));
        let p = hilbert_poly_of_coeffs(&HilbertCoefficients::from_i64(&[1, 0]));
        assert_eq!(p, QPoly::from_int_coeffs(&[1, 1]));
        assert_eq!(p.degree(), Some(1));
    }

    #[test]
    fn degree_drops_with_leading_zeros() {
        let p = hilbert_poly_of_coeffs(&HilbertCoefficients::from_i64(&[0, 2, 0]));
        assert_eq!(p, QPoly::from_int_coeffs(&[-2, -2]));
        assert_eq!(p.degree(), Some(1));
        assert!(hilbert_poly_of_coeffs(&HilbertCoefficients::from_i64(&[0, 0])).is_zero());
    }

    #[test]
    fn coefficients_round_trip() {
        let e = HilbertCoefficients::from_i64(&[4, -1, 7, 2]);
        let p = hilbert_poly_of_coeffs(&e);
        assert_eq!(HilbertCoefficients::from_poly(&p, 4).unwrap(), e);
        assert!(HilbertCoefficients::from_poly(&p, 3).is_err());
        let half = QPoly::constant(BigRational::new(big(1), big(2)));
        assert!(HilbertCoefficients::from_poly(&half, 1).is_err());
    }

    #[test]
    fn h_examples() {
        for e0 in -3..=3 {
            for e1 in -3..=3 {
                let e = HilbertCoefficients::from_i64(&[e0, e1]);
                assert_eq!(eval_h(&big(5), &big(1), &e).unwrap(), big(1 + e1));
            }
        }
        let e = HilbertCoefficients::from_i64(&[1, -1]);
        assert_eq!(eval_h(&big(1), &big(1), &e).unwrap(), big(0));
        let e = HilbertCoefficients::from_i64(&[2, 1, 0]);
        assert_eq!(eval_h(&big(2), &big(2), &e).unwrap(), big(5));
        assert!(eval_h(&big(1), &big(1), &HilbertCoefficients::from_i64(&[1])).is_err());
    }
}
