//! Exact complex scalars with rational real and imaginary parts.
//!
//! Every arithmetic operation is exact: results are kept in lowest terms
//! with positive denominators (enforced by `num_rational::Ratio`), and no
//! rounding ever occurs. Only the Gaussian-rational points of the complex
//! plane are representable; all dimension and identity statements checked
//! by this crate are field-independent over any conjugation-closed subfield
//! of the complex numbers, so nothing verified here is weakened by the
//! restriction.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeTuple;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ExactlaError;

/// An exact complex scalar `re + im·i` with arbitrary-precision rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// `re + im·i` with integer parts.
    pub fn from_parts(re: i64, im: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    /// The real rational `p/q`. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        GaussianRational {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::zero(),
        }
    }

    pub fn zero() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussianRational {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re² + im²`, the squared modulus.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(GaussianRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    /// Scale by a machine integer. Cheap paths for 0 and ±1.
    pub fn mul_int(&self, k: i64) -> Self {
        match k {
            0 => GaussianRational::zero(),
            1 => self.clone(),
            -1 => -self,
            _ => {
                let k = BigRational::from_integer(BigInt::from(k));
                GaussianRational {
                    re: &self.re * &k,
                    im: &self.im * &k,
                }
            }
        }
    }

    /// Parse one rational part from its canonical string form `p` or `p/q`.
    pub fn parse_rational(s: &str) -> Result<BigRational, ExactlaError> {
        let bad = || ExactlaError::BadRational(s.to_string());
        match s.split_once('/') {
            None => {
                let p = BigInt::from_str(s.trim()).map_err(|_| bad())?;
                Ok(BigRational::from_integer(p))
            }
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
                let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(p, q))
            }
        }
    }

    /// Canonical string form of one rational part: `p` when the denominator
    /// is 1, else `p/q`.
    pub fn format_rational(r: &BigRational) -> String {
        if r.denom().is_one() {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", Self::format_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}i", Self::format_rational(&self.im));
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(
            f,
            "{}{}{}i",
            Self::format_rational(&self.re),
            sign,
            Self::format_rational(&self.im.abs())
        )
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        if rhs.is_zero() {
            return self.clone();
        }
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.is_zero() || rhs.is_zero() {
            return GaussianRational::zero();
        }
        // Purely real operands are the common case in this crate.
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational {
                re: &self.re * &rhs.re,
                im: BigRational::zero(),
            };
        }
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inv().expect("division by zero");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

// Shared JSON encoding: a complex entry is the two-element array
// ["re", "im"] with each part written as "p" or "p/q".
impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&Self::format_rational(&self.re))?;
        t.serialize_element(&Self::format_rational(&self.im))?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct EntryVisitor;

        impl<'de> Visitor<'de> for EntryVisitor {
            type Value = GaussianRational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a two-element array [re, im] of rational strings")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let re: String = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let im: String = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<serde::de::IgnoredAny>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                let re = GaussianRational::parse_rational(&re).map_err(de::Error::custom)?;
                let im = GaussianRational::parse_rational(&im).map_err(de::Error::custom)?;
                Ok(GaussianRational::new(re, im))
            }
        }

        deserializer.deserialize_tuple(2, EntryVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact_and_reduced() {
        let a = GaussianRational::ratio(1, 3);
        let b = GaussianRational::ratio(1, 6);
        let s = &a + &b;
        assert_eq!(s, GaussianRational::ratio(1, 2));
        assert_eq!(s.re().denom(), &BigInt::from(2));

        let third = &GaussianRational::one() / &GaussianRational::from_int(3);
        assert_eq!(&(&third * &GaussianRational::from_int(3)), &GaussianRational::one());
    }

    #[test]
    fn complex_multiplication_and_inverse() {
        let z = GaussianRational::from_parts(1, 2);
        let w = GaussianRational::from_parts(3, -1);
        // (1+2i)(3-i) = 5+5i
        assert_eq!(&z * &w, GaussianRational::from_parts(5, 5));
        let zi = z.inv().unwrap();
        assert!((&z * &zi).is_one());
        assert!(GaussianRational::zero().inv().is_none());
        assert_eq!(&GaussianRational::i() * &GaussianRational::i(), GaussianRational::from_int(-1));
    }

    #[test]
    fn denominators_stay_positive() {
        let r = GaussianRational::ratio(1, -2);
        assert_eq!(GaussianRational::format_rational(r.re()), "-1/2");
        let q = GaussianRational::ratio(-3, -6);
        assert_eq!(GaussianRational::format_rational(q.re()), "1/2");
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-7", "22/7", "-22/7"] {
            let r = GaussianRational::parse_rational(s).unwrap();
            assert_eq!(GaussianRational::format_rational(&r), s);
        }
        assert!(GaussianRational::parse_rational("1/0").is_err());
        assert!(GaussianRational::parse_rational("x").is_err());
    }
}
