//! Scalar traits shared by the generic matrix and polynomial code.
//!
//! The characteristic-polynomial routine runs unchanged over exact rationals
//! and over polynomials-in-beta, so the ring surface is a trait rather than a
//! concrete type. Fields additionally expose an approximate magnitude, which
//! is what lets one elimination routine serve both the exact backend
//! (tolerance zero, any nonzero pivot) and the float backend (threshold
//! pivoting).

use std::fmt::Debug;

use crate::complex::CplxF;
use crate::rational::Rational;

/// Commutative ring with an embedding of the integers and exact division by
/// nonzero integers (every ring in this crate is a Q-algebra).
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_int(k: i64) -> Self;

    /// Exact division by a nonzero integer. Panics on `k == 0`.
    fn div_int(&self, k: i64) -> Self;
}

/// Ring with exact division: `a.exact_div(b) == Some(q)` iff `a == q*b`.
/// Fraction-free (Bareiss) elimination needs this and nothing more.
pub trait ExactDiv: Ring {
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

/// Field scalar, plus an approximate magnitude for threshold pivoting.
pub trait FieldScalar: Ring {
    /// Multiplicative inverse. Panics on zero; elimination guards pivots.
    fn inv(&self) -> Self;

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }

    /// |self| as a float. Exact scalars may round; it is only used to rank
    /// pivot candidates and to compare against numeric thresholds.
    fn approx_mag(&self) -> f64;
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(k: i64) -> Self {
        Rational::from_int(k)
    }
    fn div_int(&self, k: i64) -> Self {
        assert!(k != 0, "division by zero integer");
        self / &Rational::from_int(k)
    }
}

impl ExactDiv for Rational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }
}

impl FieldScalar for Rational {
    fn inv(&self) -> Self {
        self.recip().expect("inverse of zero")
    }
    fn approx_mag(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl Ring for CplxF {
    fn zero() -> Self {
        CplxF::zero()
    }
    fn one() -> Self {
        CplxF::one()
    }
    fn is_zero(&self) -> bool {
        CplxF::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        *self + *rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        *self - *rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        *self * *rhs
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn from_int(k: i64) -> Self {
        CplxF::raw(k as f64, 0.0)
    }
    fn div_int(&self, k: i64) -> Self {
        assert!(k != 0, "division by zero integer");
        CplxF::raw(self.re() / k as f64, self.im() / k as f64)
    }
}

impl FieldScalar for CplxF {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }
    fn approx_mag(&self) -> f64 {
        self.abs()
    }
}
