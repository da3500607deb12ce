//! Small dense square matrices over a generic scalar.
//!
//! Everything in this crate works on matrices of modest size (the analysis
//! routines cap at n = 8), so storage is a flat row-major `Vec` and the
//! products are schoolbook. Checked operations return errors on dimension
//! mismatch rather than panicking; the CLI surfaces those as input errors.

use std::fmt;
use std::ops::Index;

use crate::complex::CplxF;
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::Rational;
use crate::scalar::Ring;

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    n: usize,
    entries: Vec<S>,
}

impl<S: Ring> Matrix<S> {
    /// Builds an `n x n` matrix from row-major entries.
    pub fn new(n: usize, entries: Vec<S>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::NotSquare {
                n,
                len: entries.len(),
            });
        }
        Ok(Matrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare {
                n,
                len: rows.iter().map(Vec::len).sum(),
            });
        }
        Matrix::new(n, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![S::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = S::one();
        }
        Matrix { n, entries }
    }

    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            entries: vec![S::zero(); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(S::is_zero)
    }

    fn check_dims(&self, rhs: &Self, op: &'static str) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                op,
                left: self.n,
                right: rhs.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_dims(rhs, "add")?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Matrix {
            n: self.n,
            entries,
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_dims(rhs, "sub")?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(Matrix {
            n: self.n,
            entries,
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_dims(rhs, "mul")?;
        let n = self.n;
        let mut entries = vec![S::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = a.mul(rhs.get(k, j));
                    entries[i * n + j] = entries[i * n + j].add(&t);
                }
            }
        }
        Ok(Matrix { n, entries })
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.n, "vector length mismatch");
        self.rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(S::zero(), |acc, (a, x)| acc.add(&a.mul(x)))
            })
            .collect()
    }

    pub fn scale(&self, c: &S) -> Self {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(S::neg).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix { n, entries }
    }

    pub fn trace(&self) -> S {
        (0..self.n).fold(S::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Matrix::identity(self.n);
        for _ in 0..k {
            acc = acc.mul(self).expect("same dimension");
        }
        acc
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl Matrix<Rational> {
    pub fn to_complex(&self) -> Matrix<CplxF> {
        self.map(|r| CplxF::raw(r.to_f64(), 0.0))
    }

    /// Lifts entries to constant polynomials (scalars in the beta-ring).
    pub fn to_poly_entries(&self) -> Matrix<UniPoly<Rational>> {
        self.map(|r| {
            if r.is_zero() {
                UniPoly::zero()
            } else {
                UniPoly::constant(r.clone())
            }
        })
    }

    /// Parses a matrix of integers, handy in tests and presets.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_int(v)).collect())
                .collect(),
        )
    }
}

impl Matrix<CplxF> {
    /// Max absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        self.rows()
            .map(|row| row.iter().map(CplxF::abs).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.entries[i * self.n + j]
    }
}

impl<S: Ring + fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows()
            .map(|row| row.iter().map(|c| c.to_string()).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .max()
            .unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}{:?}", self.n, self.n, self.entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_int_rows(rows).unwrap()
    }

    #[test]
    fn construction_checks_shape() {
        assert!(Matrix::new(2, vec![Rational::zero(); 3]).is_err());
        assert!(Matrix::<Rational>::new(0, vec![]).is_err());
        assert!(Matrix::from_rows(vec![vec![Rational::zero()], vec![]]).is_err());
    }

    #[test]
    fn product_and_trace() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), m(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.trace(), Rational::from_int(5));
        assert!(a.mul(&Matrix::identity(3)).is_err());
    }

    #[test]
    fn transpose_is_involutive() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(*a.transpose().get(0, 2), Rational::from_int(7));
    }

    #[test]
    fn symmetry_probe() {
        assert!(m(&[&[0, 1], &[1, 0]]).is_symmetric());
        assert!(!m(&[&[0, 1], &[2, 0]]).is_symmetric());
    }

    #[test]
    fn powers_and_vectors() {
        let nilp = m(&[&[0, 1], &[0, 0]]);
        assert!(nilp.pow(2).is_zero());
        let v = vec![Rational::from_int(1), Rational::from_int(5)];
        assert_eq!(
            nilp.mul_vec(&v),
            vec![Rational::from_int(5), Rational::zero()]
        );
    }
}
