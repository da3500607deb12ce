//! Permutation symmetries of a matrix and what they do to eigenspaces.
//!
//! A permutation p of the basis indices acts through the orthogonal matrix
//! U with U[i][p(i)] = 1, so that (U·c)ᵢ = c_{p(i)} — components move, the
//! matrix stays put. The permutations with Uᵗ·H·U = H form a group, the
//! invariance group of H, and [`invariance_group`] finds it by brute force:
//! at the dimension cap of 8 that is 40320 candidates, each tested exactly
//! over the rationals, which costs nothing compared to getting it wrong.
//!
//! The payoff is the link to degeneracy: every U in the group maps
//! eigenspaces of H to themselves, so a group bigger than {identity} forces
//! structure on the spectrum. A two-dimensional eigenspace sitting on top
//! of a nontrivial symmetry group is the generic picture of a degeneracy —
//! in contrast to an eigenvalue coalescence without symmetry, where the
//! eigenspace stays one-dimensional and diagonalizability is lost instead.
//!
//! Nothing here is assumed: the found element set is re-verified to satisfy
//! the group axioms (closure via generated-subgroup comparison, identity,
//! inverses), and [`check_eigenvector_symmetry`] tests span containment
//! vector by vector.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::{in_span, rows_inf_norm, Tol};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::spectral::{check_dim, NumericOpts, SpectralReport, SpectralValue};

/// Above this group order the Cayley table is skipped: the full symmetric
/// group on 8 indices has order 40320 and a 40320² table serves nobody.
const CAYLEY_CAP: usize = 256;

/// Up to this order, minimal generating sets are found exhaustively.
const EXHAUSTIVE_GENERATOR_CAP: usize = 12;

/// A permutation of {0, …, n−1}, stored as the image list i ↦ images[i].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Validates that `images` is a bijection on {0, …, n−1}.
    pub fn new(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation { images, n });
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Composition "self first, then other": i ↦ other(self(i)).
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    /// Smallest k ≥ 1 with p^k = identity.
    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.then(self);
            k += 1;
        }
        k
    }
}

/// Cycle notation, e.g. `(0 1 2)(3 4)`; the identity prints as `id`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
                first = false;
                i = self.images[i];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "id")?;
        }
        Ok(())
    }
}

/// Structure name for a small group, by order and element-order fingerprint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupLabel {
    Trivial,
    /// Cₖ for k in 2..=8.
    Cyclic(usize),
    /// C₂×C₂.
    KleinFour,
    /// C₄×C₂.
    C4xC2,
    /// C₂×C₂×C₂.
    ElementaryAbelian8,
    S3,
    D4,
    Q8,
    /// Order is known but the structure is outside the labeling scope.
    Order(usize),
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Trivial => write!(f, "trivial"),
            GroupLabel::Cyclic(k) => write!(f, "C{k}"),
            GroupLabel::KleinFour => write!(f, "C2xC2"),
            GroupLabel::C4xC2 => write!(f, "C4xC2"),
            GroupLabel::ElementaryAbelian8 => write!(f, "C2xC2xC2"),
            GroupLabel::S3 => write!(f, "S3"),
            GroupLabel::D4 => write!(f, "D4"),
            GroupLabel::Q8 => write!(f, "Q8"),
            GroupLabel::Order(n) => write!(f, "order-{n}"),
        }
    }
}

/// A verified permutation group: the invariance group of some matrix, or
/// any element list that passed the axiom check.
#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    pub elements: Vec<Perm>,
    /// `table[i][j]` = index of `elements[i].then(elements[j])`. Omitted
    /// above order 256 — see [`struct@SymmetryGroup`] docs for the cap.
    pub cayley_table: Option<Vec<Vec<usize>>>,
    pub label: GroupLabel,
    /// A smallest generating set (exhaustively minimal up to order 12,
    /// greedily chosen above that). Empty for the trivial group.
    pub generators: Vec<Perm>,
}

impl SymmetryGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// The permutation matrix U of p: U[i][p(i)] = 1, so (U·c)ᵢ = c_{p(i)}.
pub fn perm_matrix(p: &Perm) -> Matrix<Rational> {
    let n = p.degree();
    let mut u = Matrix::zero(n);
    for i in 0..n {
        u.set(i, p.apply(i), Rational::from_int(1));
    }
    u
}

/// All permutations fixing m under conjugation: Uᵗ·m·U = m, tested exactly.
///
/// Permutation matrices only shuffle entries — (Uᵗ·m·U)[i][j] is
/// m[p⁻¹(i)][p⁻¹(j)] — so the test compares m[p(i)][p(j)] with m[i][j],
/// which is the same equation without forming any products.
pub fn invariance_group(m: &Matrix<Rational>) -> Result<SymmetryGroup> {
    let n = m.dim();
    check_dim(n)?;
    let elements: Vec<Perm> = (0..n)
        .permutations(n)
        .map(|images| Perm { images })
        .filter(|p| leaves_invariant(m, p))
        .collect();
    group_from_elements(elements)
}

/// Names the group structure of an element list, after re-verifying that it
/// actually is a group.
pub fn label_group(g: &[Perm]) -> Result<GroupLabel> {
    verify_group_axioms(g)?;
    Ok(classify(g))
}

/// For each eigenvalue: is its eigenspace mapped into itself by every group
/// element? Exact spans are tested exactly; numeric ones at the default
/// rank tolerance. When g is the full invariance group of m the answer is
/// always true — anything else signals a bug, so callers may assert on it.
pub fn check_eigenvector_symmetry(
    m: &Matrix<Rational>,
    g: &SymmetryGroup,
    report: &SpectralReport,
) -> Result<Vec<(SpectralValue, bool)>> {
    let n = m.dim();
    if let Some(p) = g.elements.first() {
        if p.degree() != n {
            return Err(Error::DimensionMismatch {
                op: "check_eigenvector_symmetry",
                left: n,
                right: p.degree(),
            });
        }
    }
    let mut verdicts = Vec::with_capacity(report.eigenvalues.len());
    for e in &report.eigenvalues {
        let all_exact = e.eigenspace.iter().all(|v| v.exact().is_some());
        let invariant = if all_exact {
            let basis: Vec<Vec<Rational>> = e
                .eigenspace
                .iter()
                .map(|v| v.exact().expect("checked").to_vec())
                .collect();
            g.elements.iter().all(|p| {
                basis.iter().all(|v| {
                    let moved: Vec<Rational> =
                        (0..n).map(|i| v[p.apply(i)].clone()).collect();
                    in_span(&basis, &moved, Tol::exact())
                })
            })
        } else {
            let basis: Vec<Vec<crate::complex::CplxF>> =
                e.eigenspace.iter().map(|v| v.to_complex()).collect();
            let tol = Tol::relative(NumericOpts::default().rank_rel, rows_inf_norm(&basis));
            g.elements.iter().all(|p| {
                basis.iter().all(|v| {
                    let moved: Vec<crate::complex::CplxF> =
                        (0..n).map(|i| v[p.apply(i)]).collect();
                    in_span(&basis, &moved, tol)
                })
            })
        };
        verdicts.push((e.value.clone(), invariant));
    }
    Ok(verdicts)
}

fn leaves_invariant(m: &Matrix<Rational>, p: &Perm) -> bool {
    let n = m.dim();
    (0..n).all(|i| (0..n).all(|j| m.get(p.apply(i), p.apply(j)) == m.get(i, j)))
}

fn group_from_elements(elements: Vec<Perm>) -> Result<SymmetryGroup> {
    verify_group_axioms(&elements)?;
    let label = classify(&elements);
    let generators = minimal_generators(&elements);
    let cayley_table = (elements.len() <= CAYLEY_CAP).then(|| {
        let index: std::collections::HashMap<&Perm, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| index[&a.then(b)])
                    .collect::<Vec<_>>()
            })
            .collect()
    });
    Ok(SymmetryGroup {
        elements,
        cayley_table,
        label,
        generators,
    })
}

/// Identity, inverses, closure. Closure is checked by rebuilding: a greedy
/// generating subset is closed transitively and the generated subgroup must
/// equal the input set — linear in |G|·|generators| instead of quadratic,
/// and still a complete proof of closure.
fn verify_group_axioms(elements: &[Perm]) -> Result<()> {
    let not_a_group = || Error::NotAGroup;
    let first = elements.first().ok_or_else(not_a_group)?;
    let n = first.degree();
    if elements.iter().any(|p| p.degree() != n) {
        return Err(not_a_group());
    }
    let set: HashSet<&Perm> = elements.iter().collect();
    if set.len() != elements.len() || !set.contains(&Perm::identity(n)) {
        return Err(not_a_group());
    }
    if elements.iter().any(|p| !set.contains(&p.inverse())) {
        return Err(not_a_group());
    }
    let mut gens: Vec<Perm> = Vec::new();
    let mut generated: HashSet<Perm> = HashSet::new();
    generated.insert(Perm::identity(n));
    for p in elements {
        if !generated.contains(p) {
            gens.push(p.clone());
            generated = closure(&gens, n);
        }
    }
    if generated.len() != elements.len() {
        return Err(not_a_group());
    }
    Ok(())
}

/// The subgroup generated by `gens`: breadth-first products. Finite order
/// makes inverses reachable, so right-multiplication alone suffices.
fn closure(gens: &[Perm], n: usize) -> HashSet<Perm> {
    let mut out: HashSet<Perm> = HashSet::new();
    let mut queue = vec![Perm::identity(n)];
    out.insert(Perm::identity(n));
    while let Some(p) = queue.pop() {
        for g in gens {
            let q = p.then(g);
            if out.insert(q.clone()) {
                queue.push(q);
            }
        }
    }
    out
}

/// Order plus element-order fingerprint pins down every group up to order 8.
fn classify(elements: &[Perm]) -> GroupLabel {
    let order = elements.len();
    if order == 1 {
        return GroupLabel::Trivial;
    }
    if order > 8 {
        return GroupLabel::Order(order);
    }
    let orders: Vec<usize> = elements.iter().map(Perm::order).collect();
    let cyclic = orders.iter().any(|&k| k == order);
    if cyclic {
        return GroupLabel::Cyclic(order);
    }
    let abelian = elements
        .iter()
        .enumerate()
        .all(|(i, a)| elements[i + 1..].iter().all(|b| a.then(b) == b.then(a)));
    match (order, abelian) {
        (4, _) => GroupLabel::KleinFour,
        (6, false) => GroupLabel::S3,
        (8, true) => {
            if orders.iter().any(|&k| k == 4) {
                GroupLabel::C4xC2
            } else {
                GroupLabel::ElementaryAbelian8
            }
        }
        (8, false) => {
            let fours = orders.iter().filter(|&&k| k == 4).count();
            if fours == 6 {
                GroupLabel::Q8
            } else {
                GroupLabel::D4
            }
        }
        // non-cyclic groups of prime order do not exist, and a non-cyclic
        // abelian group of order 6 would contradict the structure theorem;
        // the axioms were verified, so these are unreachable
        _ => GroupLabel::Order(order),
    }
}

fn minimal_generators(elements: &[Perm]) -> Vec<Perm> {
    let n = elements[0].degree();
    if elements.len() == 1 {
        return Vec::new();
    }
    if elements.len() <= EXHAUSTIVE_GENERATOR_CAP {
        let candidates: Vec<&Perm> = elements.iter().filter(|p| !p.is_identity()).collect();
        for size in 1..=candidates.len() {
            for combo in candidates.iter().combinations(size) {
                let gens: Vec<Perm> = combo.iter().map(|p| (**p).clone()).collect();
                if closure(&gens, n).len() == elements.len() {
                    return gens;
                }
            }
        }
        unreachable!("the whole element set generates itself");
    }
    // greedy: small but not provably minimal at these orders
    let mut gens: Vec<Perm> = Vec::new();
    let mut generated: HashSet<Perm> = HashSet::new();
    generated.insert(Perm::identity(n));
    for p in elements {
        if !generated.contains(p) {
            gens.push(p.clone());
            generated = closure(&gens, n);
        }
    }
    gens
}
