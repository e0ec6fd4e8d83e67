//! Scalar field abstraction.
//!
//! Everything in the linear-algebra and polynomial layers is written against
//! [`Field`]. The representation-theoretic layers fix the scalar to the exact
//! [`Rational`](crate::Rational) alias: their equality tests are exact and
//! would be meaningless over floating point.

use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, NumAssignRef, One, RefNum, Signed, Zero};

use crate::error::{Error, Result};

/// A commutative field with by-reference arithmetic.
pub trait Field: Clone + Debug + PartialEq + Num + NumAssignRef + std::ops::Neg<Output = Self> + Send + Sync + 'static {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn div_ref(&self, rhs: &Self) -> Self;

    fn from_i64(v: i64) -> Self {
        let mut acc = Self::zero();
        let one = Self::one();
        let neg = v < 0;
        let mut m = v.unsigned_abs();
        // binary expansion keeps this exact for every field
        let mut pow = one;
        while m > 0 {
            if m & 1 == 1 {
                acc += &pow;
            }
            pow = pow.add_ref(&pow);
            m >>= 1;
        }
        if neg {
            -acc
        } else {
            acc
        }
    }

    fn inv(&self) -> Self {
        Self::one().div_ref(self)
    }
}

impl<T> Field for T
where
    T: Clone + Debug + PartialEq + Num + NumAssignRef + std::ops::Neg<Output = T> + Send + Sync + 'static,
    for<'a> &'a T: RefNum<T>,
{
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders as `p/q`, or `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Integer value of `q`, if it is one and fits.
pub fn as_i64(q: &Rational) -> Option<i64> {
    if !q.is_integer() {
        return None;
    }
    i64::try_from(q.numer()).ok()
}

pub fn is_negative_integer(q: &Rational) -> bool {
    q.is_integer() && q.is_negative()
}

pub(crate) mod serde_rational_vec {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(format_rational).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| parse_rational(s).map_err(serde::de::Error::custom)).collect()
    }
}

pub(crate) mod serde_rational_opt_vec {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(|v| v.iter().map(format_rational).collect::<Vec<_>>()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Rational>>, D::Error> {
        let v = Option::<Vec<String>>::deserialize(d)?;
        v.map(|v| v.iter().map(|s| parse_rational(s).map_err(serde::de::Error::custom)).collect()).transpose()
    }
}
