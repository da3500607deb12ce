//! Gaussian elimination over a generic field scalar, plus a fraction-free
//! determinant over exact-division rings.
//!
//! One routine serves both backends. The exact backend runs with tolerance
//! zero: a pivot is any entry that is not identically zero, and every step
//! is exact rational (or polynomial) arithmetic. The float backend passes a
//! relative tolerance and a scale; entries below `rel * scale` are treated
//! as zero and pivots are chosen by largest magnitude. Rank decisions,
//! eigenspaces, Jordan chains, and consistency checks all reduce to this.

use crate::complex::CplxF;
use crate::matrix::Matrix;
use crate::rational::{lcm_big, Rational};
use crate::scalar::{ExactDiv, FieldScalar};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Zero threshold for elimination decisions.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Tol {
    rel: f64,
    scale: f64,
}

impl Tol {
    pub(crate) fn exact() -> Self {
        Tol {
            rel: 0.0,
            scale: 0.0,
        }
    }

    /// `rel` is relative to `scale` (typically the inf-norm of the matrix).
    pub(crate) fn relative(rel: f64, scale: f64) -> Self {
        Tol { rel, scale }
    }

    pub(crate) fn is_exact(&self) -> bool {
        self.rel == 0.0
    }

    pub(crate) fn negligible<S: FieldScalar>(&self, x: &S) -> bool {
        if self.is_exact() {
            x.is_zero()
        } else {
            x.approx_mag() <= self.rel * self.scale
        }
    }

}

pub(crate) struct Echelon<S> {
    pub rows: Vec<Vec<S>>,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

/// In-place row echelon form with normalized pivots. Pivot search is
/// restricted to columns `0..pivot_limit`, which is how augmented systems
/// keep their right-hand side out of the pivot set.
pub(crate) fn echelon<S: FieldScalar>(
    mut rows: Vec<Vec<S>>,
    pivot_limit: usize,
    tol: Tol,
) -> Echelon<S> {
    let m = rows.len();
    let mut rank = 0usize;
    let mut pivot_cols = vec![];
    for col in 0..pivot_limit {
        if rank == m {
            break;
        }
        // exact: first usable row (deterministic); numeric: largest magnitude
        let mut best: Option<(usize, f64)> = None;
        for r in rank..m {
            let x = &rows[r][col];
            if tol.negligible(x) {
                continue;
            }
            if tol.is_exact() {
                best = Some((r, 0.0));
                break;
            }
            let mag = x.approx_mag();
            if best.is_none_or(|(_, bm)| mag > bm) {
                best = Some((r, mag));
            }
        }
        let Some((prow, _)) = best else { continue };
        rows.swap(rank, prow);
        let ncols = rows[rank].len();
        let pinv = rows[rank][col].inv();
        for j in col..ncols {
            rows[rank][j] = rows[rank][j].mul(&pinv);
        }
        rows[rank][col] = S::one();
        let (pivot_row, below) = {
            let (head, tail) = rows.split_at_mut(rank + 1);
            (&head[rank], tail)
        };
        for r in below.iter_mut() {
            let f = r[col].clone();
            if f.is_zero() {
                continue;
            }
            for j in col..ncols {
                let t = pivot_row[j].mul(&f);
                r[j] = r[j].sub(&t);
            }
            r[col] = S::zero();
        }
        pivot_cols.push(col);
        rank += 1;
    }
    Echelon {
        rows,
        pivot_cols,
        rank,
    }
}

pub(crate) fn rank_of<S: FieldScalar>(rows: Vec<Vec<S>>, ncols: usize, tol: Tol) -> usize {
    echelon(rows, ncols, tol).rank
}

/// Basis of the right null space of the linear map given by `rows` acting on
/// `ncols`-vectors. One basis vector per free column, in column order.
pub(crate) fn null_space_of<S: FieldScalar>(
    rows: Vec<Vec<S>>,
    ncols: usize,
    tol: Tol,
) -> Vec<Vec<S>> {
    let ech = echelon(rows, ncols, tol);
    let mut is_pivot = vec![false; ncols];
    for &c in &ech.pivot_cols {
        is_pivot[c] = true;
    }
    let mut basis = vec![];
    for fc in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![S::zero(); ncols];
        x[fc] = S::one();
        for p in (0..ech.rank).rev() {
            let pc = ech.pivot_cols[p];
            let mut acc = S::zero();
            for j in pc + 1..ncols {
                if !x[j].is_zero() {
                    acc = acc.add(&ech.rows[p][j].mul(&x[j]));
                }
            }
            x[pc] = acc.neg();
        }
        basis.push(x);
    }
    basis
}

/// Minimal-support particular solution of `A x = b` (free variables zero),
/// or `None` when the system is inconsistent at the given tolerance.
pub(crate) fn solve_particular<S: FieldScalar>(
    a_rows: &[Vec<S>],
    b: &[S],
    ncols: usize,
    tol: Tol,
) -> Option<Vec<S>> {
    assert_eq!(a_rows.len(), b.len());
    let rows: Vec<Vec<S>> = a_rows
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    let m = rows.len();
    let ech = echelon(rows, ncols, tol);
    for r in ech.rank..m {
        if !tol.negligible(&ech.rows[r][ncols]) {
            return None;
        }
    }
    let mut x = vec![S::zero(); ncols];
    for p in (0..ech.rank).rev() {
        let pc = ech.pivot_cols[p];
        let mut acc = ech.rows[p][ncols].clone();
        for j in pc + 1..ncols {
            if !x[j].is_zero() {
                acc = acc.sub(&ech.rows[p][j].mul(&x[j]));
            }
        }
        x[pc] = acc;
    }
    Some(x)
}

/// Is `v` in the span of `basis`? (All vectors the same length; the span of
/// an empty basis contains only zero.)
pub(crate) fn in_span<S: FieldScalar>(basis: &[Vec<S>], v: &[S], tol: Tol) -> bool {
    if basis.is_empty() {
        return v.iter().all(|x| tol.negligible(x));
    }
    let n = v.len();
    let rows: Vec<Vec<S>> = (0..n)
        .map(|i| basis.iter().map(|b| b[i].clone()).collect())
        .collect();
    solve_particular(&rows, v, basis.len(), tol).is_some()
}

/// Determinant by fraction-free (Bareiss) elimination. Over `Rational` every
/// intermediate is exact by construction; over polynomial entries the exact
/// divisions are guaranteed by the algorithm and asserted at runtime.
pub fn det<S: ExactDiv>(m: &Matrix<S>) -> S {
    let n = m.dim();
    let mut rows = m.to_rows();
    let mut negate = false;
    let mut prev = S::one();
    for k in 0..n.saturating_sub(1) {
        if rows[k][k].is_zero() {
            let Some(sr) = (k + 1..n).find(|&r| !rows[r][k].is_zero()) else {
                return S::zero();
            };
            rows.swap(k, sr);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = rows[k][k].mul(&rows[i][j]).sub(&rows[i][k].mul(&rows[k][j]));
                rows[i][j] = t
                    .exact_div(&prev)
                    .expect("Bareiss interior division is exact");
            }
            rows[i][k] = S::zero();
        }
        prev = rows[k][k].clone();
    }
    let d = rows[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Exact rank of a rational matrix.
pub fn rank(m: &Matrix<Rational>) -> usize {
    rank_of(m.to_rows(), m.dim(), Tol::exact())
}

/// Exact null-space basis of a rational matrix.
pub fn null_space(m: &Matrix<Rational>) -> Vec<Vec<Rational>> {
    null_space_of(m.to_rows(), m.dim(), Tol::exact())
}

/// Exact minimal-support solution of `m x = b`, if one exists.
pub fn solve(m: &Matrix<Rational>, b: &[Rational]) -> Option<Vec<Rational>> {
    solve_particular(&m.to_rows(), b, m.dim(), Tol::exact())
}

/// Scales a rational vector to coprime integer entries with the first
/// nonzero entry positive. The zero vector is returned unchanged.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<Rational> {
    let mut den = BigInt::one();
    for x in v {
        den = lcm_big(&den, x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| {
            let scaled = x * &Rational::from_int(den.clone());
            debug_assert!(scaled.is_integer());
            scaled.numer().clone()
        })
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    let flip = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    ints.into_iter()
        .map(|x| {
            let y = &x / &g;
            Rational::from_int(if flip { -y } else { y })
        })
        .collect()
}

/// The scalar that [`normalize_complex_vector`] multiplies by: rotates the
/// first significant component onto the positive real axis and scales to
/// unit 2-norm. Returns 1 for the zero vector.
pub(crate) fn complex_normalization_factor(v: &[CplxF]) -> CplxF {
    let max_mag = v.iter().map(CplxF::abs).fold(0.0, f64::max);
    if max_mag == 0.0 {
        return CplxF::one();
    }
    let lead = v
        .iter()
        .find(|x| x.abs() > 1e-8 * max_mag)
        .copied()
        .unwrap_or_else(CplxF::one);
    let phase = CplxF::raw(lead.re() / lead.abs(), -lead.im() / lead.abs());
    let norm = v.iter().map(|x| x.abs() * x.abs()).sum::<f64>().sqrt();
    CplxF::raw(phase.re() / norm, phase.im() / norm)
}

/// Unit 2-norm with the first significant component rotated to the positive
/// real axis, giving a deterministic representative of the complex ray.
pub fn normalize_complex_vector(v: &[CplxF]) -> Vec<CplxF> {
    let s = complex_normalization_factor(v);
    v.iter().map(|x| *x * s).collect()
}

/// Max absolute row sum, by scalar magnitude proxy.
pub(crate) fn rows_inf_norm<S: FieldScalar>(rows: &[Vec<S>]) -> f64 {
    rows.iter()
        .map(|r| r.iter().map(S::approx_mag).sum::<f64>())
        .fold(0.0, f64::max)
}

pub(crate) fn vec_inf_norm(v: &[CplxF]) -> f64 {
    v.iter().map(CplxF::abs).fold(0.0, f64::max)
}

/// `||m v||_inf` for a residual check, with `v` complex and `m` complex.
pub(crate) fn residual_inf_norm(m: &Matrix<CplxF>, v: &[CplxF]) -> f64 {
    vec_inf_norm(&m.mul_vec(v))
}

pub(crate) fn rational_vec_to_complex(v: &[Rational]) -> Vec<CplxF> {
    v.iter().map(|x| CplxF::raw(x.to_f64(), 0.0)).collect()
}
