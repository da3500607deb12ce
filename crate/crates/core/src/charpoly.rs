//! Characteristic polynomials, exactly.
//!
//! The same Faddeev-LeVerrier recursion runs over two scalar rings: plain
//! rationals for a single matrix, and rational polynomials in the family
//! parameter for a whole affine family at once. The second run produces a
//! bivariate polynomial p(lambda; beta), and its discriminant with respect
//! to lambda is the polynomial in beta whose real roots are the only
//! parameters where eigenvalues can collide. No floating point enters at
//! any step here.

use crate::error::{Error, Result};
use crate::family::AffineFamily;
use crate::linalg::det;
use crate::matrix::Matrix;
use crate::poly::UniPoly;
use crate::rational::Rational;
use crate::scalar::{ExactDiv, Ring};

use std::fmt;

/// Characteristic polynomial `det(lambda I - m)`, monic of degree `n`.
///
/// Faddeev-LeVerrier: with `M_0 = 0` and `c_n = 1`,
/// `M_k = m M_{k-1} + c_{n-k+1} I` and `c_{n-k} = -tr(m M_k) / k`.
/// The divisions by `k` are exact in any ring containing the integers'
/// quotients that arise here, which both scalar choices used in this crate
/// do.
pub fn char_poly<S: Ring>(m: &Matrix<S>) -> UniPoly<S> {
    let n = m.dim();
    let mut coeffs = vec![S::zero(); n + 1];
    coeffs[n] = S::one();
    let mut mk = Matrix::<S>::zero(n);
    for k in 1..=n {
        let mut t = m.mul(&mk).expect("square matrices of equal dimension");
        for i in 0..n {
            let d = t.get(i, i).add(&coeffs[n - k + 1]);
            t.set(i, i, d);
        }
        let prod = m.mul(&t).expect("square matrices of equal dimension");
        coeffs[n - k] = prod.trace().neg().div_int(k as i64);
        mk = t;
    }
    UniPoly::new(coeffs)
}

/// The characteristic polynomial of a family, `p(lambda; beta)`: a monic
/// polynomial in lambda whose coefficients are polynomials in beta.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly {
    // outer variable lambda, inner variable beta; leading outer coefficient
    // is the constant polynomial 1
    inner: UniPoly<UniPoly<Rational>>,
}

impl BiPoly {
    /// Builds from coefficient polynomials in beta, ascending in
    /// lambda-degree. The leading coefficient must be the constant 1.
    pub fn new(coeffs_in_beta: Vec<UniPoly<Rational>>) -> Result<Self> {
        let inner = UniPoly::new(coeffs_in_beta);
        if inner.leading() != Some(&UniPoly::one()) {
            return Err(Error::NotMonic);
        }
        Ok(BiPoly { inner })
    }

    fn from_char_poly(inner: UniPoly<UniPoly<Rational>>) -> Self {
        debug_assert_eq!(inner.leading(), Some(&UniPoly::one()));
        BiPoly { inner }
    }

    /// Degree in lambda, i.e. the matrix dimension.
    pub fn lambda_degree(&self) -> usize {
        self.inner.degree().expect("monic, hence nonzero")
    }

    /// Coefficient polynomials in beta, ascending in lambda-degree.
    pub fn coeffs_in_beta(&self) -> &[UniPoly<Rational>] {
        self.inner.coeffs()
    }

    /// Coefficient of `lambda^k` as a polynomial in beta.
    pub fn coeff(&self, k: usize) -> UniPoly<Rational> {
        self.inner.coeff(k)
    }

    /// Evaluates the beta variable, leaving a univariate polynomial in
    /// lambda. Exact; always monic of the same lambda-degree.
    pub fn specialize(&self, beta: &Rational) -> UniPoly<Rational> {
        UniPoly::new(
            self.inner
                .coeffs()
                .iter()
                .map(|c| c.eval(beta))
                .collect::<Vec<_>>(),
        )
    }

    pub(crate) fn as_unipoly(&self) -> &UniPoly<UniPoly<Rational>> {
        &self.inner
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in (0..=self.lambda_degree()).rev() {
            let c = self.coeff(k);
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.display_with_var("beta");
            let needs_parens = c.degree() > Some(0) || cs.starts_with('-');
            match (k, needs_parens) {
                (0, true) => write!(f, "({cs})")?,
                (0, false) => write!(f, "{cs}")?,
                _ => {
                    if c == UniPoly::one() {
                        // coefficient 1 is silent
                    } else if needs_parens {
                        write!(f, "({cs})*")?;
                    } else {
                        write!(f, "{cs}*")?;
                    }
                    if k == 1 {
                        write!(f, "lambda")?;
                    } else {
                        write!(f, "lambda^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Characteristic polynomial of the whole family in one symbolic pass.
pub fn char_poly_family(fam: &AffineFamily) -> BiPoly {
    BiPoly::from_char_poly(char_poly(&fam.to_poly_matrix()))
}

/// Resultant of two polynomials over an exact-division ring, by Sylvester
/// matrix determinant. Conventions for the edge cases: two constants have
/// resultant 1; a constant `c` against a polynomial of degree `d` gives
/// `c^d`; anything against the zero polynomial gives 0.
pub fn resultant<S: ExactDiv>(f: &UniPoly<S>, g: &UniPoly<S>) -> S {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return S::zero();
    };
    if df == 0 && dg == 0 {
        return S::one();
    }
    if df == 0 {
        return pow_ring(f.leading().unwrap(), dg);
    }
    if dg == 0 {
        return pow_ring(g.leading().unwrap(), df);
    }
    let size = df + dg;
    let mut rows = Vec::with_capacity(size);
    for i in 0..dg {
        let mut row = vec![S::zero(); size];
        for (j, k) in (0..=df).rev().enumerate() {
            row[i + j] = f.coeff(k);
        }
        rows.push(row);
    }
    for i in 0..df {
        let mut row = vec![S::zero(); size];
        for (j, k) in (0..=dg).rev().enumerate() {
            row[i + j] = g.coeff(k);
        }
        rows.push(row);
    }
    let entries: Vec<S> = rows.into_iter().flatten().collect();
    det(&Matrix::new(size, entries).expect("square by construction"))
}

fn pow_ring<S: Ring>(x: &S, k: usize) -> S {
    let mut acc = S::one();
    for _ in 0..k {
        acc = acc.mul(x);
    }
    acc
}

/// Discriminant of `p` with respect to lambda: a polynomial in beta that
/// vanishes exactly at the parameters where `p(.; beta)` has a repeated
/// root. For monic `p` of degree `n` this is
/// `(-1)^(n(n-1)/2) * Res(p, dp/dlambda)`.
///
/// The zero polynomial is a legitimate output: it means every parameter
/// value carries a repeated eigenvalue, and callers that enumerate critical
/// points must refuse such families rather than report "no roots".
pub fn discriminant_in_beta(p: &BiPoly) -> UniPoly<Rational> {
    let n = p.lambda_degree();
    if n == 1 {
        return UniPoly::one();
    }
    let dp = p.as_unipoly().derivative();
    let r = resultant(p.as_unipoly(), &dp);
    if (n * (n - 1) / 2) % 2 == 1 {
        r.neg()
    } else {
        r
    }
}
