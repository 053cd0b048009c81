use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::KernelError;

/// Element arithmetic. Every element knows enough about its field to do
/// arithmetic with another element of the same field.
pub trait Scalar: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

/// A coefficient field: the constants and the conversion from integers and
/// fractions.
pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Scalar;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// `num / den`, or `None` when `den` is zero in this field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Self::Elem>;
    /// `"Q"` or `"GF(p)"`.
    fn describe(&self) -> String;
    /// Number of elements, `None` for infinite fields.
    fn size(&self) -> Option<u64>;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }
}

/// The rational numbers with arbitrary-precision numerator and denominator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Scalar for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<BigRational> {
        (!den.is_zero()).then(|| BigRational::new(num.clone(), den.clone()))
    }
    fn describe(&self) -> String {
        "Q".to_string()
    }
    fn size(&self) -> Option<u64> {
        None
    }
}

/// The prime field `Z/p`, `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, KernelError> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(KernelError::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn elem(&self, v: u64) -> Fp {
        Fp { v: (v % self.p as u64) as u32, p: self.p }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// An element of `Z/p`, carrying its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u32,
    p: u32,
}

impl Fp {
    pub fn value(&self) -> u32 {
        self.v
    }

    fn same(&self, other: &Fp) -> u64 {
        debug_assert_eq!(self.p, other.p, "mixing prime fields");
        self.p as u64
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Scalar for Fp {
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn is_one(&self) -> bool {
        self.v == 1
    }
    fn add(&self, other: &Self) -> Self {
        let p = self.same(other);
        Fp { v: ((self.v as u64 + other.v as u64) % p) as u32, p: self.p }
    }
    fn sub(&self, other: &Self) -> Self {
        let p = self.same(other);
        Fp { v: ((self.v as u64 + p - other.v as u64) % p) as u32, p: self.p }
    }
    fn mul(&self, other: &Self) -> Self {
        let p = self.same(other);
        Fp { v: ((self.v as u64 * other.v as u64) % p) as u32, p: self.p }
    }
    fn neg(&self) -> Self {
        Fp { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }
    fn inv(&self) -> Self {
        assert!(self.v != 0, "inverse of zero");
        // Fermat: a^(p-2)
        let p = self.p as u64;
        let mut base = self.v as u64;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        Fp { v: acc as u32, p: self.p }
    }
}

impl Field for PrimeField {
    type Elem = Fp;

    fn zero(&self) -> Fp {
        Fp { v: 0, p: self.p }
    }
    fn one(&self) -> Fp {
        Fp { v: 1, p: self.p }
    }
    fn from_bigint(&self, n: &BigInt) -> Fp {
        let r = n.mod_floor(&BigInt::from(self.p));
        Fp { v: r.to_u32().expect("residue below p"), p: self.p }
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Fp> {
        let d = self.from_bigint(den);
        (!d.is_zero()).then(|| self.from_bigint(num).mul(&d.inv()))
    }
    fn describe(&self) -> String {
        format!("GF({})", self.p)
    }
    fn size(&self) -> Option<u64> {
        Some(self.p as u64)
    }
}
