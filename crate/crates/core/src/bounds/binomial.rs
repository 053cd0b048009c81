use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::univariate::QPoly;

/// Binomial coefficient with the truncation used throughout the bounds:
/// `0` for `b < 0`, `1` for `b == 0` whatever `a` is, `0` when `b >= 1` and
/// `a < b`, and the ordinary binomial otherwise.
pub fn trunc_binomial(a: &BigInt, b: &BigInt) -> BigInt {
    if b.is_negative() {
        return BigInt::zero();
    }
    if b.is_zero() {
        return BigInt::one();
    }
    if a < b {
        return BigInt::zero();
    }
    let other = a - b;
    let k = if &other < b { other } else { b.clone() };
    let k = k
        .to_u64()
        .expect("binomial with both b and a-b beyond u64 range");
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (a - BigInt::from(j)) / BigInt::from(j + 1);
    }
    acc
}

pub fn trunc_binomial_i64(a: i64, b: i64) -> BigInt {
    trunc_binomial(&BigInt::from(a), &BigInt::from(b))
}

/// The polynomial `binom(x + top_shift, b)`, i.e.
/// `(x+top_shift)(x+top_shift-1)...(x+top_shift-b+1) / b!`.
pub fn poly_binomial(top_shift: i64, b: usize) -> QPoly {
    let mut acc = QPoly::constant(BigRational::one());
    let mut fact = BigInt::one();
    for k in 0..b {
        let factor = QPoly::from_int_coeffs(&[top_shift - k as i64, 1]);
        acc = acc.mul(&factor);
        fact *= BigInt::from(k + 1);
    }
    acc.scale(&BigRational::new(BigInt::one(), fact))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn truncation_rules() {
        assert_eq!(trunc_binomial_i64(5, 2), big(10));
        assert_eq!(trunc_binomial_i64(1, 2), big(0));
        assert_eq!(trunc_binomial_i64(-1, 0), big(1));
        assert_eq!(trunc_binomial_i64(-4, 0), big(1));
        assert_eq!(trunc_binomial_i64(3, -1), big(0));
        assert_eq!(trunc_binomial_i64(-3, 2), big(0));
        assert_eq!(trunc_binomial_i64(7, 7), big(1));
    }

    #[test]
    fn large_bottom_uses_symmetry() {
        // binom(10^20 + 2, 10^20) = (10^20+2)(10^20+1)/2
        let n = BigInt::from(10u8).pow(20);
        let got = trunc_binomial(&(&n + 2), &n);
        assert_eq!(got, (&n + 2) * (&n + 1) / 2);
    }

    #[test]
    fn poly_binomial_examples() {
        let p = poly_binomial(1, 1);
        assert_eq!(p, QPoly::from_int_coeffs(&[1, 1]));
        assert!(p.eval_i64(-1).is_zero());
        let q = poly_binomial(2, 2);
        assert_eq!(q.eval_integer(-3), big(1));
        assert_eq!(q.eval_integer(0), big(1));
        assert_eq!(q.eval_integer(3), big(10));
        assert_eq!(poly_binomial(0, 0), QPoly::from_int_coeffs(&[1]));
    }

    #[test]
    fn poly_binomial_matches_trunc_on_nonnegative_tops() {
        for shift in -3..4i64 {
            for b in 0..5usize {
                let p = poly_binomial(shift, b);
                for x in 0..8i64 {
                    let top = x + shift;
                    if top >= 0 {
                        assert_eq!(p.eval_integer(x), trunc_binomial_i64(top, b as i64));
                    }
                }
            }
        }
    }
}
