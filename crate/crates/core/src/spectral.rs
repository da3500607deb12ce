//! Eigenvalues, eigenspaces, multiplicities, and the diagonalizability
//! verdict for one rational matrix.
//!
//! The route is characteristic-polynomial-first: factor out every rational
//! eigenvalue in exact arithmetic, and only hand what remains to floating
//! point. A matrix whose spectrum is rational, which includes every matrix
//! this crate's built-in family produces at its interesting parameters,
//! never touches a float on the way to its multiplicities. The payoff is
//! that "algebraic 2, geometric 1" is a theorem about the input, not a
//! reading of near-zero pivots.
//!
//! Numeric values enter for irrational or complex spectra. Degree-one and
//! degree-two residual factors are solved by formula with the discriminant
//! sign decided in rational arithmetic (so "real pair" vs "conjugate pair"
//! is never a rounding call); higher-degree residuals go to the
//! Aberth-Ehrlich iteration behind a residual gate.

use crate::aberth::aberth_roots;
use crate::charpoly::char_poly;
use crate::complex::CplxF;
use crate::error::{Error, Result};
use crate::linalg::{
    normalize_complex_vector, null_space, null_space_of, primitive_integer_vector,
    rational_vec_to_complex, residual_inf_norm, vec_inf_norm, Tol,
};
use crate::matrix::Matrix;
use crate::poly::UniPoly;
use crate::rational::Rational;
use crate::roots::isolate_real_roots;

use std::cmp::Ordering;
use std::fmt;

/// Hard cap on matrix dimension. Everything here is built for desk-scale
/// inputs; past this size the exact resultants and the n! symmetry search
/// stop being instant, so refuse early instead of degrading.
pub const MAX_DIM: usize = 8;

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n > MAX_DIM {
        return Err(Error::DimensionCap { n, cap: MAX_DIM });
    }
    Ok(())
}

/// An eigenvalue as the pipeline knows it: exactly rational, or a float
/// that survived a residual check.
#[derive(Clone, Debug, PartialEq)]
pub enum SpectralValue {
    Exact(Rational),
    Numeric(CplxF),
}

impl SpectralValue {
    pub fn to_cplx(&self) -> CplxF {
        match self {
            SpectralValue::Exact(v) => CplxF::raw(v.to_f64(), 0.0),
            SpectralValue::Numeric(z) => *z,
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            SpectralValue::Exact(_) => true,
            SpectralValue::Numeric(z) => z.im() == 0.0,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            SpectralValue::Exact(v) => Some(v),
            SpectralValue::Numeric(_) => None,
        }
    }

    /// Total order by (real part, imaginary part); rational-vs-float
    /// comparisons are done by lifting the float into the rationals, so the
    /// order never depends on rounding a rational down to a double.
    pub fn sort_cmp(&self, other: &Self) -> Ordering {
        use SpectralValue::*;
        match (self, other) {
            (Exact(a), Exact(b)) => a.cmp(b),
            (Numeric(x), Numeric(y)) => x.sort_cmp(y),
            (Exact(a), Numeric(y)) => match a.cmp_f64(y.re()) {
                Ordering::Equal => 0.0f64.total_cmp(&y.im()),
                o => o,
            },
            (Numeric(_), Exact(_)) => other.sort_cmp(self).reverse(),
        }
    }
}

impl From<Rational> for SpectralValue {
    fn from(v: Rational) -> Self {
        SpectralValue::Exact(v)
    }
}

impl From<CplxF> for SpectralValue {
    fn from(z: CplxF) -> Self {
        SpectralValue::Numeric(z)
    }
}

impl fmt::Display for SpectralValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralValue::Exact(v) => write!(f, "{v}"),
            SpectralValue::Numeric(z) => write!(f, "{z}"),
        }
    }
}

/// A basis vector in whichever arithmetic produced it.
#[derive(Clone, Debug, PartialEq)]
pub enum VectorRepr {
    Exact(Vec<Rational>),
    Numeric(Vec<CplxF>),
}

impl VectorRepr {
    pub fn len(&self) -> usize {
        match self {
            VectorRepr::Exact(v) => v.len(),
            VectorRepr::Numeric(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_complex(&self) -> Vec<CplxF> {
        match self {
            VectorRepr::Exact(v) => rational_vec_to_complex(v),
            VectorRepr::Numeric(v) => v.clone(),
        }
    }

    pub fn exact(&self) -> Option<&[Rational]> {
        match self {
            VectorRepr::Exact(v) => Some(v),
            VectorRepr::Numeric(_) => None,
        }
    }
}

/// One eigenvalue with both multiplicities and an eigenspace basis.
/// `geo_mult == eigenspace.len()` always; `geo_mult < alg_mult` is what
/// makes a matrix defective.
#[derive(Clone, Debug)]
pub struct Eigenvalue {
    pub value: SpectralValue,
    pub alg_mult: usize,
    pub geo_mult: usize,
    pub eigenspace: Vec<VectorRepr>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Numeric,
}

/// Full spectral account of one matrix. `backend` is `Exact` only when no
/// floating-point value appears anywhere in the report.
#[derive(Clone, Debug)]
pub struct SpectralReport {
    pub eigenvalues: Vec<Eigenvalue>,
    pub diagonalizable: bool,
    pub backend: Backend,
}

impl SpectralReport {
    pub fn dim(&self) -> usize {
        self.eigenvalues.iter().map(|e| e.alg_mult).sum()
    }

    /// The defective eigenvalues, if any.
    pub fn defective(&self) -> impl Iterator<Item = &Eigenvalue> {
        self.eigenvalues.iter().filter(|e| e.geo_mult < e.alg_mult)
    }
}

/// Float-side thresholds. `rank_rel` scales with the shifted matrix norm
/// and decides pivot-vs-zero during elimination; `residual_tol` gates the
/// final eigenvector residuals. Exact-arithmetic paths ignore both.
#[derive(Clone, Copy, Debug)]
pub struct NumericOpts {
    pub rank_rel: f64,
    pub residual_tol: f64,
}

impl Default for NumericOpts {
    fn default() -> Self {
        NumericOpts {
            rank_rel: 1e-8,
            residual_tol: 1e-10,
        }
    }
}

/// Roots of a rational polynomial with multiplicities, sorted by
/// (re, im). Rational roots come out exact; the rest satisfy the residual
/// gate `|p(z)| <= 1e-8 (1+|z|)^deg`.
pub(crate) fn poly_roots(p: &UniPoly<Rational>) -> Result<Vec<(SpectralValue, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out: Vec<(SpectralValue, usize)> = vec![];
    for (factor, mult) in p.square_free_decomposition() {
        if factor.degree() == Some(0) {
            continue;
        }
        let (rationals, residual) = split_rational_roots(&factor)?;
        for v in rationals {
            out.push((SpectralValue::Exact(v), mult));
        }
        for v in residual_roots(&residual)? {
            out.push((v, mult));
        }
    }
    out.sort_by(|a, b| a.0.sort_cmp(&b.0));
    Ok(out)
}

/// Extracts every rational root of a square-free factor and divides it out
/// exactly, leaving a residual with only irrational/complex roots.
fn split_rational_roots(f: &UniPoly<Rational>) -> Result<(Vec<Rational>, UniPoly<Rational>)> {
    let mut residual = f.monic();
    let mut found = vec![];
    for root in isolate_real_roots(f)? {
        if let Some(v) = root.location.exact() {
            let lin = UniPoly::new(vec![-v.clone(), Rational::one()]);
            residual = residual.div_rem(&lin)?.0;
            found.push(v.clone());
        }
    }
    Ok((found, residual))
}

/// Roots of a square-free residual known to have no rational roots.
fn residual_roots(g: &UniPoly<Rational>) -> Result<Vec<SpectralValue>> {
    match g.degree() {
        None | Some(0) => Ok(vec![]),
        // a linear factor's root is rational, so it was already deflated;
        // kept as a real branch anyway rather than an unreachable!()
        Some(1) => {
            let root = -(g.coeff(0) / g.coeff(1));
            Ok(vec![SpectralValue::Exact(root)])
        }
        Some(2) => Ok(quadratic_roots(g)),
        Some(_) => Ok(aberth_roots(g)?
            .into_iter()
            .map(SpectralValue::Numeric)
            .collect()),
    }
}

/// Quadratic by formula, with the discriminant sign decided exactly. A
/// negative discriminant yields a bit-exact conjugate pair whose real part
/// comes from the exact value -b/2a; "does this pair have an imaginary
/// part" is therefore a rational-arithmetic fact, not a float comparison.
fn quadratic_roots(g: &UniPoly<Rational>) -> Vec<SpectralValue> {
    let a = g.coeff(2);
    let b = g.coeff(1);
    let c = g.coeff(0);
    let disc = &(&b * &b) - &(Rational::from_int(4) * &(&a * &c));
    debug_assert!(!disc.is_zero(), "square-free quadratic cannot have a double root");
    if disc.is_negative() {
        let re = (-(&b) / (Rational::from_int(2) * &a)).to_f64();
        let im = ((-&disc).to_f64().sqrt() / (2.0 * a.to_f64())).abs();
        return vec![
            SpectralValue::Numeric(CplxF::raw(re, -im)),
            SpectralValue::Numeric(CplxF::raw(re, im)),
        ];
    }
    if let Some(s) = disc.sqrt_exact() {
        // rational pair; normally deflated before we get here
        let two_a = Rational::from_int(2) * &a;
        return vec![
            SpectralValue::Exact((-(&b) - &s) / two_a.clone()),
            SpectralValue::Exact((-(&b) + &s) / two_a),
        ];
    }
    // real irrational pair: stable formula, no cancellation in q
    let (af, bf, cf) = (a.to_f64(), b.to_f64(), c.to_f64());
    let s = disc.to_f64().sqrt();
    let q = -0.5 * (bf + bf.signum() * s);
    debug_assert!(q != 0.0, "|q| >= s/2 > 0 for positive discriminant");
    let (x1, x2) = (q / af, cf / q);
    vec![
        SpectralValue::Numeric(CplxF::raw(x1, 0.0)),
        SpectralValue::Numeric(CplxF::raw(x2, 0.0)),
    ]
}

/// Eigenvalues of `m` with algebraic multiplicities, sorted by (re, im).
pub fn eigenvalues(m: &Matrix<Rational>) -> Result<Vec<(SpectralValue, usize)>> {
    check_dim(m.dim())?;
    poly_roots(&char_poly(m))
}

/// Basis of the eigenspace of `m` at `lambda`, with default thresholds.
pub fn eigenspace(m: &Matrix<Rational>, lambda: &SpectralValue) -> Result<Vec<VectorRepr>> {
    eigenspace_with(m, lambda, &NumericOpts::default())
}

/// Basis of `null(m - lambda I)`. Exact lambda: exact elimination,
/// primitive-integer basis vectors. Numeric lambda: threshold-pivot
/// elimination at `rank_rel * ||m - lambda I||_inf`, unit vectors with a
/// deterministic sign, each gated by the residual bound
/// `||(m - lambda I) v||_inf <= residual_tol * ||m||_inf * ||v||_inf`.
pub fn eigenspace_with(
    m: &Matrix<Rational>,
    lambda: &SpectralValue,
    opts: &NumericOpts,
) -> Result<Vec<VectorRepr>> {
    check_dim(m.dim())?;
    let n = m.dim();
    match lambda {
        SpectralValue::Exact(v) => {
            let shifted = m
                .sub(&Matrix::identity(n).scale(v))
                .expect("same dimension");
            let basis = null_space(&shifted);
            if basis.is_empty() {
                return Err(Error::NotAnEigenvalue {
                    lambda: v.to_string(),
                });
            }
            Ok(basis
                .iter()
                .map(|b| VectorRepr::Exact(primitive_integer_vector(b)))
                .collect())
        }
        SpectralValue::Numeric(z) => {
            let hc = m.to_complex();
            let shifted = hc
                .sub(&Matrix::<CplxF>::identity(n).scale(z))
                .expect("same dimension");
            let scale = shifted.inf_norm();
            let tol = Tol::relative(opts.rank_rel, scale);
            let basis = null_space_of(shifted.to_rows(), n, tol);
            if basis.is_empty() {
                return Err(Error::NotAnEigenvalue {
                    lambda: z.to_string(),
                });
            }
            let h_norm = hc.inf_norm();
            let mut out = vec![];
            for b in &basis {
                let v = normalize_complex_vector(b);
                let resid = residual_inf_norm(&shifted, &v);
                if resid > opts.residual_tol * h_norm * vec_inf_norm(&v) {
                    return Err(Error::NotAnEigenvalue {
                        lambda: z.to_string(),
                    });
                }
                out.push(VectorRepr::Numeric(v));
            }
            Ok(out)
        }
    }
}

/// Complete spectral report with default thresholds.
pub fn analyze(m: &Matrix<Rational>) -> Result<SpectralReport> {
    analyze_with(m, &NumericOpts::default())
}

pub fn analyze_with(m: &Matrix<Rational>, opts: &NumericOpts) -> Result<SpectralReport> {
    check_dim(m.dim())?;
    let values = poly_roots(&char_poly(m))?;
    debug_assert_eq!(values.iter().map(|(_, k)| k).sum::<usize>(), m.dim());
    let mut eigenvalues = Vec::with_capacity(values.len());
    let mut backend = Backend::Exact;
    for (value, alg_mult) in values {
        if matches!(value, SpectralValue::Numeric(_)) {
            backend = Backend::Numeric;
        }
        let eigenspace = eigenspace_with(m, &value, opts)?;
        let geo_mult = eigenspace.len();
        if geo_mult > alg_mult {
            return Err(Error::InternalRankInconsistency {
                detail: format!(
                    "eigenvalue {value}: geometric multiplicity {geo_mult} exceeds algebraic {alg_mult}"
                ),
            });
        }
        eigenvalues.push(Eigenvalue {
            value,
            alg_mult,
            geo_mult,
            eigenspace,
        });
    }
    let diagonalizable = eigenvalues.iter().all(|e| e.geo_mult == e.alg_mult);
    Ok(SpectralReport {
        eigenvalues,
        diagonalizable,
        backend,
    })
}

/// `|cos angle|` between the eigenvectors of two *simple* eigenvalues, in
/// [0, 1]. Approaches 1 as the two eigenvectors coalesce. Errors if either
/// value is not a simple eigenvalue of `m`.
pub fn eigenvector_overlap(
    m: &Matrix<Rational>,
    lam1: &SpectralValue,
    lam2: &SpectralValue,
) -> Result<f64> {
    let report = analyze(m)?;
    let v1 = simple_eigenvector(&report, lam1)?;
    let v2 = simple_eigenvector(&report, lam2)?;
    let mut inner_re = 0.0;
    let mut inner_im = 0.0;
    let mut n1 = 0.0;
    let mut n2 = 0.0;
    for (a, b) in v1.iter().zip(&v2) {
        // conj(a) * b accumulated by parts
        inner_re += a.re() * b.re() + a.im() * b.im();
        inner_im += a.re() * b.im() - a.im() * b.re();
        n1 += a.abs() * a.abs();
        n2 += b.abs() * b.abs();
    }
    let overlap = (inner_re.hypot(inner_im)) / (n1.sqrt() * n2.sqrt());
    Ok(overlap.clamp(0.0, 1.0))
}

fn simple_eigenvector(report: &SpectralReport, lambda: &SpectralValue) -> Result<Vec<CplxF>> {
    let target = lambda.to_cplx();
    let best = report
        .eigenvalues
        .iter()
        .min_by(|a, b| {
            let da = (a.value.to_cplx() - target).abs();
            let db = (b.value.to_cplx() - target).abs();
            da.total_cmp(&db)
        })
        .expect("report has at least one eigenvalue");
    let dist = (best.value.to_cplx() - target).abs();
    if dist > 1e-6 * (1.0 + target.abs()) {
        return Err(Error::NotAnEigenvalue {
            lambda: lambda.to_string(),
        });
    }
    if best.alg_mult != 1 {
        return Err(Error::NonSimpleEigenvalue {
            lambda: best.value.to_string(),
            alg_mult: best.alg_mult,
        });
    }
    Ok(best.eigenspace[0].to_complex())
}
