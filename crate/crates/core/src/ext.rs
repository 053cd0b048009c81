//! Integers extended by the two sentinels `-inf` and `+inf`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

/// An integer value or one of the two infinities.
///
/// The derived ordering puts `NegInf` below every finite value and `PosInf`
/// above it, which is exactly what `sup`/`inf` bookkeeping needs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended<T> {
    NegInf,
    Finite(T),
    PosInf,
}

pub type ExtInt = Extended<i64>;
pub type ExtBig = Extended<BigInt>;

impl<T> Extended<T> {
    pub fn finite(&self) -> Option<&T> {
        match self {
            Extended::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Extended<U> {
        match self {
            Extended::NegInf => Extended::NegInf,
            Extended::Finite(v) => Extended::Finite(f(v)),
            Extended::PosInf => Extended::PosInf,
        }
    }
}

impl ExtInt {
    pub fn to_big(&self) -> ExtBig {
        self.clone().map(BigInt::from)
    }

    /// Adds a finite offset; infinities absorb it.
    pub fn shift(&self, by: i64) -> ExtInt {
        self.clone().map(|v| v + by)
    }

    /// The negation, swapping the infinities.
    pub fn negate(&self) -> ExtInt {
        match self {
            Extended::NegInf => Extended::PosInf,
            Extended::Finite(v) => Extended::Finite(-v),
            Extended::PosInf => Extended::NegInf,
        }
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        Extended::Finite(v)
    }
}

impl From<BigInt> for ExtBig {
    fn from(v: BigInt) -> Self {
        Extended::Finite(v)
    }
}

impl<T: fmt::Display> fmt::Display for Extended<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::NegInf => f.write_str("-inf"),
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::PosInf => f.write_str("+inf"),
        }
    }
}

/// Finite values serialize as JSON numbers, sentinels as the strings
/// `"-inf"` / `"+inf"`.
impl Serialize for Extended<i64> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(v) => s.serialize_i64(*v),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

/// Big values that fit an `i64` are plain JSON numbers; larger ones become
/// decimal strings so no precision is lost.
impl Serialize for Extended<BigInt> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(v) => match i64::try_from(v) {
                Ok(small) => s.serialize_i64(small),
                Err(_) => s.serialize_str(&v.to_string()),
            },
            other => s.serialize_str(&other.to_string()),
        }
    }
}
