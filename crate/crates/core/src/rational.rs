//! Arbitrary-precision rationals.
//!
//! `Rational` wraps [`num_rational::BigRational`] and keeps its canonical-form
//! invariants (reduced, positive denominator) while adding the pieces the rest
//! of the crate needs: checked construction, parsing of `p/q` and plain
//! decimal strings without a float round-trip, an overflow-safe `f64`
//! conversion, and serde support that always writes strings, never floats.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number: reduced `num/den` with `den > 0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`, reducing and normalizing the sign.
    ///
    /// ```
    /// use epscan::Rational;
    /// let r = Rational::new(6, -4).unwrap();
    /// assert_eq!(r.to_string(), "-3/2");
    /// ```
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn pow(&self, exp: i32) -> Result<Self> {
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.pow(exp)))
    }

    /// Largest integer `<= self`.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Smallest integer `>= self`.
    pub fn ceil_int(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Exact conversion from a finite `f64` (every finite double is dyadic).
    pub fn from_f64_exact(x: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::NonFinite { value: x });
        }
        Ok(Rational(
            BigRational::from_float(x).expect("finite float is rational"),
        ))
    }

    /// Rounds to the nearest `f64`, safe for numerators and denominators far
    /// beyond the float range (the naive `num/den` conversion overflows to
    /// `inf/inf` there).
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let num = self.numer();
        let den = self.denom();
        let sign = if num.is_negative() { -1.0 } else { 1.0 };
        let a = num.abs();
        // Scale so the integer quotient keeps ~63 significant bits.
        let e = a.bits() as i64 - den.bits() as i64 - 63;
        let q = if e >= 0 {
            &a / (den << e as u64)
        } else {
            (&a << (-e) as u64) / den
        };
        let q = q.to_f64().expect("quotient fits in f64 range");
        sign * q * 2f64.powi(e.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
    }

    /// True when `self >= 0` and `sqrt(self)` is rational; returns the root.
    pub fn sqrt_exact(&self) -> Option<Rational> {
        if self.is_negative() {
            return None;
        }
        let ns = self.numer().sqrt();
        let ds = self.denom().sqrt();
        if &(&ns * &ns) == self.numer() && &(&ds * &ds) == self.denom() {
            Some(Rational(BigRational::new(ns, ds)))
        } else {
            None
        }
    }

    /// Compares against a finite float exactly (the float is lifted to a
    /// rational, not the other way around).
    pub fn cmp_f64(&self, x: f64) -> Ordering {
        match Rational::from_f64_exact(x) {
            Ok(r) => self.cmp(&r),
            // NaN/inf never appear in sort keys; order them last.
            Err(_) => Ordering::Less,
        }
    }

}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts `p/q`, an integer, or a plain decimal such as `-1.25`, parsed from
/// the digits (never routed through a float).
///
/// ```
/// use epscan::Rational;
/// let a: Rational = "-5/4".parse().unwrap();
/// let b: Rational = "-1.25".parse().unwrap();
/// assert_eq!(a, b);
/// ```
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational {
            input: s.to_string(),
        };
        let t = s.trim();
        if let Some((num, den)) = t.split_once('/') {
            let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if den.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            return Ok(Rational(BigRational::new(num, den)));
        }
        if let Some((int_part, frac_part)) = t.split_once('.') {
            let (sign, int_digits) = match int_part.strip_prefix('-') {
                Some(rest) => (Sign::Minus, rest),
                None => (Sign::Plus, int_part.strip_prefix('+').unwrap_or(int_part)),
            };
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            if !int_digits.is_empty() && !int_digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let digits = format!("{int_digits}{frac_part}");
            let mag = BigInt::from_str(&digits).map_err(|_| bad())?;
            let mag = if sign == Sign::Minus { -mag } else { mag };
            let den = BigInt::from(10u32).pow(frac_part.len() as u32);
            return Ok(Rational(BigRational::new(mag, den)));
        }
        let n = BigInt::from_str(t).map_err(|_| bad())?;
        Ok(Rational::from_int(n))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

// Division panics on a zero divisor, matching integer division; fallible
// callers go through `recip`.
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = Rational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a string like \"p/q\"")
            }

            fn visit_i64<E: serde::de::Error>(self, v: i64) -> std::result::Result<Rational, E> {
                Ok(Rational::from_int(v))
            }

            fn visit_u64<E: serde::de::Error>(self, v: u64) -> std::result::Result<Rational, E> {
                Ok(Rational::from_int(BigInt::from(v)))
            }

            fn visit_str<E: serde::de::Error>(self, v: &str) -> std::result::Result<Rational, E> {
                v.parse().map_err(|_| {
                    E::invalid_value(serde::de::Unexpected::Str(v), &"a rational like \"p/q\"")
                })
            }
        }
        de.deserialize_any(V)
    }
}

/// lcm of two positive integers.
pub(crate) fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}
