//! Finite-checked complex floats.
//!
//! `CplxF` is the numeric-backend scalar: a pair of `f64` components that are
//! guaranteed finite at construction. Arithmetic does not re-validate (a
//! divergent intermediate surfaces through the residual checks that guard
//! every numeric result instead).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CplxF {
    re: f64,
    im: f64,
}

impl CplxF {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        for v in [re, im] {
            if !v.is_finite() {
                return Err(Error::NonFinite { value: v });
            }
        }
        Ok(CplxF { re, im })
    }

    pub fn real(re: f64) -> Result<Self> {
        CplxF::new(re, 0.0)
    }

    /// Skips the finite check; for crate-internal values already validated
    /// (or about to be residual-checked).
    pub(crate) fn raw(re: f64, im: f64) -> Self {
        CplxF { re, im }
    }

    pub fn zero() -> Self {
        CplxF { re: 0.0, im: 0.0 }
    }

    pub fn one() -> Self {
        CplxF { re: 1.0, im: 0.0 }
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn conj(&self) -> Self {
        CplxF {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn abs(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    /// Exactly zero imaginary part. Numeric real branches are constructed
    /// with `im == 0.0`, so this is a meaningful test, not a tolerance one.
    pub fn is_real(&self) -> bool {
        self.im == 0.0
    }

    pub fn recip(&self) -> Self {
        let d = self.re * self.re + self.im * self.im;
        CplxF {
            re: self.re / d,
            im: -self.im / d,
        }
    }

    /// Total order by (re, im); used to sort eigenvalue lists.
    pub fn sort_cmp(&self, other: &Self) -> Ordering {
        self.re
            .total_cmp(&other.re)
            .then(self.im.total_cmp(&other.im))
    }
}

impl fmt::Display for CplxF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0.0 {
            write!(f, "{:.12}", self.re)
        } else if self.im < 0.0 {
            write!(f, "{:.12} - {:.12}i", self.re, -self.im)
        } else {
            write!(f, "{:.12} + {:.12}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for CplxF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

impl Add for CplxF {
    type Output = CplxF;
    fn add(self, rhs: CplxF) -> CplxF {
        CplxF {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for CplxF {
    type Output = CplxF;
    fn sub(self, rhs: CplxF) -> CplxF {
        CplxF {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for CplxF {
    type Output = CplxF;
    fn mul(self, rhs: CplxF) -> CplxF {
        CplxF {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl Div for CplxF {
    type Output = CplxF;
    fn div(self, rhs: CplxF) -> CplxF {
        self * rhs.recip()
    }
}

impl Neg for CplxF {
    type Output = CplxF;
    fn neg(self) -> CplxF {
        CplxF {
            re: -self.re,
            im: -self.im,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_non_finite() {
        assert!(CplxF::new(f64::NAN, 0.0).is_err());
        assert!(CplxF::new(0.0, f64::INFINITY).is_err());
        assert!(CplxF::new(1.0, -2.0).is_ok());
    }

    #[test]
    fn field_arithmetic() {
        let a = CplxF::new(1.0, 2.0).unwrap();
        let b = CplxF::new(3.0, -1.0).unwrap();
        let p = a * b;
        assert_eq!((p.re(), p.im()), (5.0, 5.0));
        let q = p / b;
        assert!((q - a).abs() < 1e-15);
        assert_eq!(a.conj().im(), -2.0);
    }

    #[test]
    fn sort_order_is_re_then_im() {
        let mut v = vec![
            CplxF::new(0.5, 0.1).unwrap(),
            CplxF::new(-1.0, 0.0).unwrap(),
            CplxF::new(0.5, -0.1).unwrap(),
        ];
        v.sort_by(CplxF::sort_cmp);
        assert_eq!(v[0].re(), -1.0);
        assert_eq!(v[1].im(), -0.1);
        assert_eq!(v[2].im(), 0.1);
    }
}
