//! Jordan chains and the Jordan canonical form.
//!
//! When a matrix is defective, diagonalization fails but not by much: the
//! missing directions are recovered by chains. A chain for an eigenvalue λ
//! is a list v₁, …, v_k with (H − λI)v₁ = 0 and (H − λI)v_{j+1} = v_j, so
//! the shifted matrix walks the list one step to the left and annihilates
//! the head. Stacking all chains as columns of S gives H·S = S·J with J
//! block diagonal, eigenvalues on the diagonal, ones on the superdiagonal
//! inside each block — the closest thing to a diagonalization that exists.
//!
//! Chain heads cannot be arbitrary eigenvectors. Only the part of the
//! eigenspace that also lies in range((H − λI)^k) extends to a chain of
//! length k + 1, so [`jordan_decomposition`] builds the filtration
//! W_k = null(H − λI) ∩ range((H − λI)^k) and picks heads adapted to it,
//! longest chains first. Each chain then costs a single linear solve.
//!
//! Jordan structure is discontinuous in the matrix entries, which makes it
//! numerically ill-posed: an arbitrarily small perturbation merges or
//! splits blocks. The exact path (rational eigenvalues) is immune. The
//! numeric path refuses to proceed when two computed eigenvalues lie within
//! 10⁻⁶ of each other without the exact arithmetic having separated them —
//! a silent guess about block sizes would be worse than an error.

use crate::complex::CplxF;
use crate::error::{Error, Result};
use crate::linalg::{
    complex_normalization_factor, in_span, null_space_of, primitive_integer_vector, rank,
    rank_of, rows_inf_norm, solve_particular, vec_inf_norm, Tol,
};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::scalar::{FieldScalar, Ring};
use crate::spectral::{analyze_with, Eigenvalue, NumericOpts, SpectralValue, VectorRepr};

/// Two numerically distinct eigenvalues closer than this, not separated by
/// exact arithmetic, make the block structure a guess: refuse.
const CLUSTER_GAP: f64 = 1e-6;

/// Relative bound for the H·S = S·J verification on the numeric path.
const VERIFY_REL: f64 = 1e-8;

/// A single Jordan chain: `vectors[0]` is a true eigenvector and each later
/// vector maps to its predecessor under H − λI.
#[derive(Clone, Debug, PartialEq)]
pub struct JordanChain {
    pub eigenvalue: SpectralValue,
    pub vectors: Vec<VectorRepr>,
}

impl JordanChain {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// The similarity pair (S, J), in whichever arithmetic produced it.
#[derive(Clone, Debug, PartialEq)]
pub enum JordanMatrices {
    Exact {
        s: Matrix<Rational>,
        j: Matrix<Rational>,
    },
    Numeric {
        s: Matrix<CplxF>,
        j: Matrix<CplxF>,
    },
}

/// A verified Jordan decomposition: H·S = S·J with S invertible.
#[derive(Clone, Debug)]
pub struct JordanDecomposition {
    /// The chains whose vectors form the columns of S, in column order.
    pub chains: Vec<JordanChain>,
    pub matrices: JordanMatrices,
    /// One entry per block, sorted by (eigenvalue, descending block size).
    pub block_structure: Vec<(SpectralValue, usize)>,
}

impl JordanDecomposition {
    pub fn dim(&self) -> usize {
        self.block_structure.iter().map(|(_, s)| s).sum()
    }

    /// True when every block has size one.
    pub fn is_diagonal(&self) -> bool {
        self.block_structure.iter().all(|(_, s)| *s == 1)
    }
}

/// Grows a chain upward from a given eigenvector `v`: keeps solving
/// (m − λI)x = v_k for the next vector while the system stays consistent,
/// up to `max_len` vectors. Free variables in each solve are set to zero,
/// so the result is deterministic. The head is checked, not trusted.
pub fn jordan_chain(
    m: &Matrix<Rational>,
    lambda: &SpectralValue,
    v: &VectorRepr,
    max_len: usize,
) -> Result<JordanChain> {
    match (lambda.exact(), v.exact()) {
        (Some(lam), Some(head)) => jordan_chain_exact(m, lam, head, max_len),
        _ => jordan_chain_numeric(m, lambda, &v.to_complex(), max_len),
    }
}

fn jordan_chain_exact(
    m: &Matrix<Rational>,
    lam: &Rational,
    head: &[Rational],
    max_len: usize,
) -> Result<JordanChain> {
    let n = m.dim();
    if head.len() != n {
        return Err(Error::DimensionMismatch {
            op: "jordan_chain",
            left: n,
            right: head.len(),
        });
    }
    let shifted = m.sub(&Matrix::identity(n).scale(lam))?;
    let head_ok =
        !head.iter().all(Rational::is_zero) && shifted.mul_vec(head).iter().all(Rational::is_zero);
    if !head_ok {
        return Err(Error::InvalidChainHead {
            lambda: lam.to_string(),
        });
    }
    let rows = shifted.to_rows();
    let mut vectors = vec![head.to_vec()];
    while vectors.len() < max_len {
        match solve_particular(&rows, vectors.last().unwrap(), n, Tol::exact()) {
            Some(next) => vectors.push(next),
            None => break,
        }
    }
    Ok(JordanChain {
        eigenvalue: SpectralValue::Exact(lam.clone()),
        vectors: vectors.into_iter().map(VectorRepr::Exact).collect(),
    })
}

fn jordan_chain_numeric(
    m: &Matrix<Rational>,
    lambda: &SpectralValue,
    head: &[CplxF],
    max_len: usize,
) -> Result<JordanChain> {
    let n = m.dim();
    if head.len() != n {
        return Err(Error::DimensionMismatch {
            op: "jordan_chain",
            left: n,
            right: head.len(),
        });
    }
    let opts = NumericOpts::default();
    let lam = lambda.to_cplx();
    let shifted = m.to_complex().sub(&Matrix::identity(n).scale(&lam))?;
    let scale = shifted.inf_norm();
    let head_norm = vec_inf_norm(head);
    let residual = vec_inf_norm(&shifted.mul_vec(head));
    if head_norm == 0.0 || residual > opts.residual_tol * scale.max(1.0) * head_norm {
        return Err(Error::InvalidChainHead {
            lambda: lambda.to_string(),
        });
    }
    let tol = Tol::relative(opts.rank_rel, scale);
    let rows = shifted.to_rows();
    let mut vectors = vec![head.to_vec()];
    while vectors.len() < max_len {
        match solve_particular(&rows, vectors.last().unwrap(), n, tol) {
            Some(next) => vectors.push(next),
            None => break,
        }
    }
    Ok(JordanChain {
        eigenvalue: lambda.clone(),
        vectors: vectors.into_iter().map(VectorRepr::Numeric).collect(),
    })
}

/// Full Jordan decomposition with default numeric tolerances.
pub fn jordan_decomposition(m: &Matrix<Rational>) -> Result<JordanDecomposition> {
    jordan_decomposition_with(m, &NumericOpts::default())
}

/// Full Jordan decomposition. Rational spectra are handled entirely in exact
/// arithmetic; otherwise everything moves to complex floating point and the
/// result is gated on ‖HS − SJ‖∞ ≤ 10⁻⁸‖H‖∞‖S‖∞.
pub fn jordan_decomposition_with(
    m: &Matrix<Rational>,
    opts: &NumericOpts,
) -> Result<JordanDecomposition> {
    let report = analyze_with(m, opts)?;
    let evs = &report.eigenvalues;
    for i in 0..evs.len() {
        for j in i + 1..evs.len() {
            let a = &evs[i].value;
            let b = &evs[j].value;
            if a.exact().is_some() && b.exact().is_some() {
                continue; // exact arithmetic has already separated them
            }
            let gap = (a.to_cplx() - b.to_cplx()).abs();
            if gap < CLUSTER_GAP {
                return Err(Error::IllPosedJordan {
                    a: a.to_string(),
                    b: b.to_string(),
                    gap,
                });
            }
        }
    }
    if evs.iter().all(|e| e.value.exact().is_some()) {
        decompose_exact(m, &report.eigenvalues)
    } else {
        decompose_numeric(m, &report.eigenvalues, opts)
    }
}

fn decompose_exact(
    m: &Matrix<Rational>,
    eigenvalues: &[Eigenvalue],
) -> Result<JordanDecomposition> {
    let n = m.dim();
    let mut chains_out = Vec::new();
    let mut columns: Vec<Vec<Rational>> = Vec::new();
    let mut block_structure = Vec::new();
    for e in eigenvalues {
        let lam = e.value.exact().expect("exact path").clone();
        let shifted = m.sub(&Matrix::identity(n).scale(&lam))?;
        let basis: Vec<Vec<Rational>> = e
            .eigenspace
            .iter()
            .map(|v| v.exact().expect("exact path").to_vec())
            .collect();
        let chains = chains_for(&shifted, &basis, e.alg_mult, &|_| Tol::exact())?;
        check_block_counts(&chains, e)?;
        for ch in chains {
            // One scale for the whole chain keeps the shift relations intact
            // while making every column a primitive integer vector jointly.
            let ch = primitive_chain(&ch, n);
            block_structure.push((e.value.clone(), ch.len()));
            chains_out.push(JordanChain {
                eigenvalue: e.value.clone(),
                vectors: ch.iter().cloned().map(VectorRepr::Exact).collect(),
            });
            columns.extend(ch);
        }
    }
    let s = matrix_from_columns(n, &columns)?;
    let j = jordan_matrix(n, &block_structure, |v| v.exact().unwrap().clone());
    if m.mul(&s)? != s.mul(&j)? || rank(&s) != n {
        return Err(Error::InternalRankInconsistency {
            detail: "similarity check H*S = S*J failed on the exact path".into(),
        });
    }
    Ok(JordanDecomposition {
        chains: chains_out,
        matrices: JordanMatrices::Exact { s, j },
        block_structure,
    })
}

fn decompose_numeric(
    m: &Matrix<Rational>,
    eigenvalues: &[Eigenvalue],
    opts: &NumericOpts,
) -> Result<JordanDecomposition> {
    let n = m.dim();
    let mc = m.to_complex();
    let rel = opts.rank_rel;
    let mut chains_out = Vec::new();
    let mut columns: Vec<Vec<CplxF>> = Vec::new();
    let mut block_structure = Vec::new();
    for e in eigenvalues {
        let lam = e.value.to_cplx();
        let shifted = mc.sub(&Matrix::identity(n).scale(&lam))?;
        let basis: Vec<Vec<CplxF>> = e.eigenspace.iter().map(|v| v.to_complex()).collect();
        let chains = chains_for(&shifted, &basis, e.alg_mult, &|scale: f64| {
            Tol::relative(rel, scale.max(1.0))
        })?;
        check_block_counts(&chains, e)?;
        for ch in chains {
            let f = complex_normalization_factor(&ch[0]);
            let ch: Vec<Vec<CplxF>> = ch
                .iter()
                .map(|v| v.iter().map(|x| *x * f).collect())
                .collect();
            block_structure.push((e.value.clone(), ch.len()));
            chains_out.push(JordanChain {
                eigenvalue: e.value.clone(),
                vectors: ch.iter().cloned().map(VectorRepr::Numeric).collect(),
            });
            columns.extend(ch);
        }
    }
    let s = matrix_from_columns(n, &columns)?;
    let j = jordan_matrix(n, &block_structure, |v| v.to_cplx());
    let residual = mc.mul(&s)?.sub(&s.mul(&j)?)?.inf_norm();
    let bound = VERIFY_REL * mc.inf_norm() * s.inf_norm();
    let s_tol = Tol::relative(rel, s.inf_norm().max(1.0));
    if residual > bound || rank_of(s.to_rows(), n, s_tol) != n {
        return Err(Error::InternalRankInconsistency {
            detail: format!(
                "similarity residual {residual:.3e} exceeds {bound:.3e} on the numeric path"
            ),
        });
    }
    Ok(JordanDecomposition {
        chains: chains_out,
        matrices: JordanMatrices::Numeric { s, j },
        block_structure,
    })
}

/// Chains for one eigenvalue of `shifted` = H − λI, longest first.
///
/// The filtration W_k = null(shifted) ∩ range(shifted^k) counts blocks:
/// dim W_k is the number of blocks of size > k. Membership in range(A) is
/// tested through the left null space — x ∈ range(A) iff yᵗx = 0 for every
/// y with Aᵗy = 0, which holds over any field with the plain transpose.
/// Heads are drawn from the deepest W first; every head of a length-k chain
/// lies in W_{k−1}, so a basis of W_{k−1} always completes the running
/// independent set. One solve at the deepest power then yields the chain.
fn chains_for<S: FieldScalar>(
    shifted: &Matrix<S>,
    basis: &[Vec<S>],
    alg: usize,
    tol_for: &dyn Fn(f64) -> Tol,
) -> Result<Vec<Vec<Vec<S>>>> {
    let n = shifted.dim();
    if basis.len() == alg {
        return Ok(basis.iter().map(|v| vec![v.clone()]).collect());
    }
    let mut pows = vec![Matrix::identity(n)];
    for _ in 0..alg {
        pows.push(pows.last().unwrap().mul(shifted)?);
    }
    let mut w_bases: Vec<Vec<Vec<S>>> = vec![basis.to_vec()];
    for nk in pows.iter().take(alg + 1).skip(1) {
        let nk_rows = nk.transpose().to_rows();
        let tol_nk = tol_for(rows_inf_norm(&nk_rows));
        let left_null = null_space_of(nk_rows, n, tol_nk);
        let constraint: Vec<Vec<S>> = left_null
            .iter()
            .map(|y| basis.iter().map(|b| dot(y, b)).collect())
            .collect();
        let tol_c = tol_for(rows_inf_norm(&constraint));
        let coeffs = null_space_of(constraint, basis.len(), tol_c);
        let wk: Vec<Vec<S>> = coeffs.iter().map(|c| combine(basis, c, n)).collect();
        let stop = wk.is_empty();
        w_bases.push(wk);
        if stop {
            break;
        }
    }
    if !w_bases.last().unwrap().is_empty() {
        return Err(Error::InternalRankInconsistency {
            detail: "eigenspace range filtration failed to terminate".into(),
        });
    }
    let kmax = w_bases.len() - 1;
    let tol_span = tol_for(rows_inf_norm(basis));
    let mut acc: Vec<Vec<S>> = Vec::new();
    let mut heads: Vec<(Vec<S>, usize)> = Vec::new();
    for k in (1..=kmax).rev() {
        // After this round the accumulated heads span W_{k−1}.
        let target = w_bases[k - 1].len();
        for w in &w_bases[k - 1] {
            if acc.len() == target {
                break;
            }
            if !in_span(&acc, w, tol_span) {
                acc.push(w.clone());
                heads.push((w.clone(), k));
            }
        }
        if acc.len() != target {
            return Err(Error::InternalRankInconsistency {
                detail: "adapted chain heads do not fill the filtration".into(),
            });
        }
    }
    let mut chains = Vec::with_capacity(heads.len());
    for (head, k) in heads {
        if k == 1 {
            chains.push(vec![head]);
            continue;
        }
        let rows = pows[k - 1].to_rows();
        let tol_solve = tol_for(rows_inf_norm(&rows));
        let u = solve_particular(&rows, &head, n, tol_solve).ok_or_else(|| {
            Error::InternalRankInconsistency {
                detail: "chain head not reachable in the computed range".into(),
            }
        })?;
        let mut chain = vec![head];
        for j in 2..=k {
            chain.push(pows[k - j].mul_vec(&u));
        }
        chains.push(chain);
    }
    Ok(chains)
}

fn check_block_counts<S>(chains: &[Vec<Vec<S>>], e: &Eigenvalue) -> Result<()> {
    let total: usize = chains.iter().map(Vec::len).sum();
    if chains.len() != e.geo_mult || total != e.alg_mult {
        return Err(Error::InternalRankInconsistency {
            detail: format!(
                "eigenvalue {}: {} chains totalling {} vectors, expected {} chains and {}",
                e.value,
                chains.len(),
                total,
                e.geo_mult,
                e.alg_mult
            ),
        });
    }
    Ok(())
}

/// Rescales a whole chain by one rational so that every entry is an integer
/// and the joint content is 1, with the first nonzero entry of the head
/// positive. Per-vector scaling would break the shift relations.
fn primitive_chain(chain: &[Vec<Rational>], n: usize) -> Vec<Vec<Rational>> {
    let flat: Vec<Rational> = chain.iter().flatten().cloned().collect();
    let prim = primitive_integer_vector(&flat);
    prim.chunks(n).map(<[Rational]>::to_vec).collect()
}

fn matrix_from_columns<S: Ring>(n: usize, cols: &[Vec<S>]) -> Result<Matrix<S>> {
    if cols.len() != n {
        return Err(Error::InternalRankInconsistency {
            detail: format!("{} chain columns do not fill dimension {}", cols.len(), n),
        });
    }
    let mut m = Matrix::zero(n);
    for (c, col) in cols.iter().enumerate() {
        for (r, x) in col.iter().enumerate() {
            m.set(r, c, x.clone());
        }
    }
    Ok(m)
}

fn jordan_matrix<S: Ring>(
    n: usize,
    blocks: &[(SpectralValue, usize)],
    lift: impl Fn(&SpectralValue) -> S,
) -> Matrix<S> {
    let mut j = Matrix::zero(n);
    let mut base = 0;
    for (val, size) in blocks {
        for i in 0..*size {
            j.set(base + i, base + i, lift(val));
            if i + 1 < *size {
                j.set(base + i, base + i + 1, S::one());
            }
        }
        base += size;
    }
    j
}

fn dot<S: Ring>(a: &[S], b: &[S]) -> S {
    let mut acc = S::zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc.add(&x.mul(y));
    }
    acc
}

fn combine<S: Ring>(basis: &[Vec<S>], coeffs: &[S], n: usize) -> Vec<S> {
    let mut out = vec![S::zero(); n];
    for (c, b) in coeffs.iter().zip(basis) {
        for (o, x) in out.iter_mut().zip(b) {
            *o = o.add(&c.mul(x));
        }
    }
    out
}
