//! One-parameter affine matrix families `H(beta) = A + beta * B`.

use crate::error::Result;
use crate::matrix::Matrix;
use crate::poly::UniPoly;
use crate::rational::Rational;

/// Affine pencil of rational matrices. The spectrum as a function of the
/// parameter is what the rest of the crate studies: where eigenvalue branches
/// collide, and whether a collision keeps a full eigenbasis (a degeneracy)
/// or loses one (an exceptional point).
#[derive(Clone, PartialEq, Debug)]
pub struct AffineFamily {
    a: Matrix<Rational>,
    b: Matrix<Rational>,
}

impl AffineFamily {
    pub fn new(a: Matrix<Rational>, b: Matrix<Rational>) -> Result<Self> {
        // reuse the dimension check from add; the sum is discarded
        a.add(&b)?;
        Ok(AffineFamily { a, b })
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn a(&self) -> &Matrix<Rational> {
        &self.a
    }

    pub fn b(&self) -> &Matrix<Rational> {
        &self.b
    }

    /// Evaluates the family at an exact parameter value.
    ///
    /// ```
    /// use epscan::{AffineFamily, Rational};
    /// let fam = AffineFamily::preset("paper").unwrap();
    /// let h = fam.at(&Rational::from(1));
    /// assert!(h.is_symmetric());
    /// assert!(!fam.at(&Rational::from(0)).is_symmetric());
    /// ```
    pub fn at(&self, beta: &Rational) -> Matrix<Rational> {
        self.a
            .add(&self.b.scale(beta))
            .expect("family matrices share a dimension")
    }

    /// The family as a single matrix over the polynomial ring in beta;
    /// feeding this to the characteristic polynomial gives the bivariate
    /// char poly symbolically.
    pub fn to_poly_matrix(&self) -> Matrix<UniPoly<Rational>> {
        let n = self.dim();
        let mut out = Matrix::<UniPoly<Rational>>::zero(n);
        for i in 0..n {
            for j in 0..n {
                let c0 = self.a.get(i, j).clone();
                let c1 = self.b.get(i, j).clone();
                out.set(i, j, UniPoly::new(vec![c0, c1]));
            }
        }
        out
    }

    /// True when the parameter never enters (B = 0).
    pub fn is_constant(&self) -> bool {
        self.b.is_zero()
    }

    /// Built-in demonstration families, addressable from the CLI by name.
    ///
    /// `paper`: a 3x3 non-symmetric family whose spectrum shows both collision
    /// types: a diagonalizable degeneracy at beta = 1 and an exceptional
    /// point at beta = -5/4, with a complex-conjugate branch pair beyond it.
    pub fn preset(name: &str) -> Option<AffineFamily> {
        match name {
            "paper" => {
                let a = Matrix::from_int_rows(&[&[0, 1, 1], &[1, 0, 1], &[0, 1, 0]]).unwrap();
                let b = Matrix::from_int_rows(&[&[0, 0, 0], &[0, 0, 0], &[1, 0, 0]]).unwrap();
                Some(AffineFamily::new(a, b).unwrap())
            }
            _ => None,
        }
    }

    pub fn preset_names() -> &'static [&'static str] {
        &["paper"]
    }
}
