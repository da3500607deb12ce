//! Dense univariate polynomials over a generic scalar ring.
//!
//! Coefficients are stored in ascending degree with the leading coefficient
//! nonzero (the zero polynomial is the empty list). The same type serves
//! three roles: exact characteristic polynomials over `Rational`, the
//! beta-coefficients of a bivariate characteristic polynomial (a polynomial
//! whose scalars are themselves polynomials), and square-free/Sturm machinery
//! over any field scalar.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::{lcm_big, Rational};
use crate::scalar::{ExactDiv, FieldScalar, Ring};

#[derive(Clone, PartialEq)]
pub struct UniPoly<S: Ring> {
    coeffs: Vec<S>,
}

impl<S: Ring> UniPoly<S> {
    /// Builds from ascending-degree coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c * x^deg`
    pub fn monomial(c: S, deg: usize) -> Self {
        let mut coeffs = vec![S::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly::new(coeffs)
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        UniPoly::monomial(S::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| *c == S::one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).add(&rhs.coeff(k))).collect();
        UniPoly::new(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).sub(&rhs.coeff(k))).collect();
        UniPoly::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(coeffs)
    }

    pub fn scale(&self, c: &S) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul(&S::from_int(k as i64)))
            .collect();
        UniPoly::new(coeffs)
    }

    /// Horner evaluation.
    ///
    /// ```
    /// use epscan::{Rational, UniPoly};
    /// // x^2 - x - 2 at x = -1
    /// let p = UniPoly::new(vec![Rational::from(-2), Rational::from(-1), Rational::from(1)]);
    /// assert!(p.eval(&Rational::from(-1)).is_zero());
    /// ```
    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Substitutes another polynomial for the variable (used for `x -> x/D`
    /// style rescalings and by tests).
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&UniPoly::constant(c.clone()));
        }
        acc
    }
}

impl<S: FieldScalar> UniPoly<S> {
    /// Long division: `self = q*div + r` with `deg r < deg div`.
    /// Errors on a zero divisor.
    pub fn div_rem(&self, div: &Self) -> Result<(Self, Self)> {
        let Some(ddeg) = div.degree() else {
            return Err(Error::ZeroPolynomialDivisor);
        };
        let dlead_inv = div.leading().unwrap().inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![S::zero(); self.coeffs.len().saturating_sub(ddeg)];
        while rem.len() > ddeg {
            let k = rem.len() - 1 - ddeg;
            let factor = rem.last().unwrap().mul(&dlead_inv);
            if !factor.is_zero() {
                for (i, dc) in div.coeffs.iter().enumerate() {
                    let t = factor.mul(dc);
                    rem[k + i] = rem[k + i].sub(&t);
                }
                quot[k] = factor;
            }
            rem.pop();
        }
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// Scales to leading coefficient one. Zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) if *l == S::one() => self.clone(),
            Some(l) => self.scale(&l.inv()),
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Yun's square-free decomposition: returns monic pairwise-coprime
    /// factors `(f_i, i)` with `self ~ prod f_i^i` (constant factors and
    /// multiplicity-zero entries omitted). Characteristic zero only.
    pub fn square_free_decomposition(&self) -> Vec<(Self, usize)> {
        let Some(deg) = self.degree() else {
            return vec![];
        };
        if deg == 0 {
            return vec![];
        }
        let p = self.monic();
        let dp = p.derivative();
        let g = p.gcd(&dp);
        if g.degree() == Some(0) {
            return vec![(p, 1)];
        }
        let mut out = vec![];
        let mut w = p.div_rem(&g).unwrap().0;
        let mut y = dp.div_rem(&g).unwrap().0;
        let mut i = 1usize;
        loop {
            let z = y.sub(&w.derivative());
            if z.is_zero() {
                if w.degree().is_some_and(|d| d > 0) {
                    out.push((w.monic(), i));
                }
                break;
            }
            let f = w.gcd(&z);
            if f.degree().is_some_and(|d| d > 0) {
                out.push((f.clone(), i));
            }
            w = w.div_rem(&f).unwrap().0;
            y = z.div_rem(&f).unwrap().0;
            i += 1;
            if w.degree() == Some(0) {
                break;
            }
        }
        out
    }
}

impl<S: Ring> Ring for UniPoly<S> {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        UniPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        UniPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        UniPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        UniPoly::neg(self)
    }
    fn from_int(k: i64) -> Self {
        UniPoly::constant(S::from_int(k))
    }
    fn div_int(&self, k: i64) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c.div_int(k)).collect())
    }
}

/// Exact division via long division with a zero-remainder check; this is
/// what fraction-free determinants over polynomial entries rely on.
impl<S: FieldScalar> ExactDiv for UniPoly<S> {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(rhs).ok()?;
        r.is_zero().then_some(q)
    }
}

impl UniPoly<Rational> {
    /// lcm of all coefficient denominators (1 for the zero polynomial).
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| lcm_big(&acc, c.denom()))
    }

    /// For monic `f` and `d` a multiple of every coefficient denominator,
    /// returns the monic integer-coefficient polynomial `g(x) = d^deg f(x/d)`
    /// whose roots are `d` times the roots of `f`.
    pub fn scaled_integer_form(&self, d: &BigInt) -> UniPoly<Rational> {
        debug_assert!(self.is_monic());
        let deg = self.degree().unwrap_or(0);
        let dr = Rational::from_int(d.clone());
        let mut coeffs = Vec::with_capacity(deg + 1);
        let mut power = Rational::one();
        for k in (0..=deg).rev() {
            coeffs.push((self.coeff(k) * &power, k));
            power = power * &dr;
        }
        coeffs.reverse();
        UniPoly::new(coeffs.into_iter().map(|(c, _)| c).collect())
    }

    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(Rational::to_f64).collect()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs_f64()
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c)
    }

    /// Signum of the value at a rational point: -1, 0, or 1.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_negative() {
            -1
        } else {
            1
        }
    }
}

impl<S: Ring + fmt::Display> UniPoly<S> {
    pub fn display_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            // a coefficient renders as a bare signed token unless its own
            // Display already contains arithmetic (complex values do)
            let simple = !cs.contains(' ') && !cs.contains('+') && !cs[1..].contains('-');
            let (neg, mag) = if simple && cs.starts_with('-') {
                (true, cs[1..].to_string())
            } else if simple {
                (false, cs)
            } else {
                (false, format!("({cs})"))
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match k {
                0 => out.push_str(&mag),
                _ => {
                    if mag != "1" {
                        out.push_str(&mag);
                        out.push('*');
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        out
    }
}

impl<S: Ring + fmt::Display> fmt::Display for UniPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with_var("x"))
    }
}

impl<S: Ring> fmt::Debug for UniPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly{:?}", self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn rp(coeffs: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(coeffs.iter().map(|&c| r(c)).collect())
    }

    #[test]
    fn trims_and_measures() {
        let p = UniPoly::new(vec![r(1), r(0), r(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(UniPoly::<Rational>::zero().degree().is_none());
        assert_eq!(rp(&[0, 0, 3]).degree(), Some(2));
    }

    #[test]
    fn arithmetic_and_eval() {
        let p = rp(&[-2, -1, 1]); // x^2 - x - 2 = (x-2)(x+1)
        assert!(p.eval(&r(2)).is_zero());
        assert!(p.eval(&r(-1)).is_zero());
        assert_eq!(p.eval(&r(3)), r(4));
        let q = rp(&[1, 1]); // x + 1
        assert_eq!(p.mul(&q), rp(&[-2, -3, 0, 1]));
        assert_eq!(p.add(&p.neg()), UniPoly::zero());
    }

    #[test]
    fn derivative_matches_power_rule() {
        // d/dx (x^3 - 2x - 1) = 3x^2 - 2
        assert_eq!(rp(&[-1, -2, 0, 1]).derivative(), rp(&[-2, 0, 3]));
        assert_eq!(rp(&[5]).derivative(), UniPoly::zero());
    }

    #[test]
    fn division_with_remainder() {
        let p = rp(&[-1, -2, 0, 1]); // x^3 - 2x - 1
        let d = rp(&[1, 1]); // x + 1
        let (q, rem) = p.div_rem(&d).unwrap();
        assert_eq!(q, rp(&[-1, -1, 1])); // x^2 - x - 1
        assert!(rem.is_zero());
        assert_eq!(q.mul(&d).add(&rem), p);

        let (q2, r2) = rp(&[1, 0, 1]).div_rem(&rp(&[0, 1])).unwrap();
        assert_eq!(q2, rp(&[0, 1]));
        assert_eq!(r2, rp(&[1]));
        assert!(p.div_rem(&UniPoly::zero()).is_err());
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let a = rp(&[-2, -1, 1]); // (x-2)(x+1)
        let b = rp(&[-3, -2, 1]); // (x-3)(x+1)
        assert_eq!(a.gcd(&b), rp(&[1, 1]));
        assert_eq!(a.gcd(&rp(&[7])), rp(&[1]));
    }

    #[test]
    fn yun_decomposes_multiplicities() {
        // (x-1)^2 (x+2)
        let p = rp(&[1, -2, 1]).mul(&rp(&[2, 1]));
        let sf = p.square_free_decomposition();
        assert_eq!(sf, vec![(rp(&[2, 1]), 1), (rp(&[-1, 1]), 2)]);

        // square-free input comes back whole
        let q = rp(&[-2, -1, 1]);
        assert_eq!(q.square_free_decomposition(), vec![(q.clone(), 1)]);

        // (x^2+1)^3
        let c = rp(&[1, 0, 1]);
        let p3 = c.mul(&c).mul(&c);
        assert_eq!(p3.square_free_decomposition(), vec![(c, 3)]);
    }

    #[test]
    fn integer_scaling_moves_roots() {
        // monic with denominators: x^2 - 3/4 x - 1/4; roots 1 and -1/4
        let f = UniPoly::new(vec![
            Rational::new(-1, 4).unwrap(),
            Rational::new(-3, 4).unwrap(),
            r(1),
        ]);
        let d = BigInt::from(4);
        let g = f.scaled_integer_form(&d);
        // g(x) = x^2 - 3x - 4, roots 4 and -1
        assert_eq!(g, rp(&[-4, -3, 1]));
        assert!(g.eval(&r(4)).is_zero());
        assert!(g.eval(&r(-1)).is_zero());
    }

    #[test]
    fn exact_div_checks_remainder() {
        let p = rp(&[-2, -1, 1]);
        assert_eq!(p.exact_div(&rp(&[1, 1])), Some(rp(&[-2, 1])));
        assert_eq!(p.exact_div(&rp(&[5, 1])), None);
    }
}
