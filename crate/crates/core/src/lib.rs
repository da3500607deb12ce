//! Exact spectral analysis of one-parameter matrix families.
//!
//! The objects of study are affine families `H(beta) = A + beta * B` of
//! square rational matrices. As `beta` moves, eigenvalues collide, and the
//! collisions come in two flavors that look identical from the spectrum
//! alone but are structurally opposite:
//!
//! * a **degeneracy**: the repeated eigenvalue keeps a full set of
//!   independent eigenvectors (the matrix stays diagonalizable there);
//! * an **exceptional point**: eigenvectors coalesce along with the
//!   eigenvalues, the eigenspace is too small, and a Jordan block appears.
//!
//! Telling them apart is a rank decision at a root of the discriminant, so
//! floating point alone is never trustworthy there. This crate therefore
//! computes over arbitrary-precision rationals wherever the answer is a
//! discrete claim (multiplicities, block sizes, group structure) and drops
//! to floating point only for the continuous parts (plot branches, roots of
//! high-degree residual factors), with every hand-off checked.
//!
//! ```
//! use epscan::{AffineFamily, Rational};
//!
//! let fam = AffineFamily::preset("paper").unwrap();
//! let h = fam.at(&Rational::from_int(1));
//! assert!(h.is_symmetric());
//! ```
//!
//! The pieces compose bottom-up: exact scalars ([`Rational`], [`CplxF`]),
//! polynomials ([`UniPoly`]), matrices ([`Matrix`]) and families
//! ([`AffineFamily`]), then characteristic polynomials, real-root isolation,
//! spectral reports, Jordan structure, permutation symmetry, and parameter
//! sweeps with CSV/SVG emission on top.

mod aberth;
pub mod charpoly;
pub mod complex;
pub mod emit;
pub mod error;
pub mod family;
pub mod jordan;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod scalar;
pub mod spectral;
pub mod sweep;
pub mod symmetry;

pub use charpoly::{char_poly, char_poly_family, discriminant_in_beta, resultant, BiPoly};
pub use complex::CplxF;
pub use emit::{render_csv, render_svg, write_csv, write_svg, PlotComponent};
pub use error::{Error, Result};
pub use family::AffineFamily;
pub use jordan::{
    jordan_chain, jordan_decomposition, jordan_decomposition_with, JordanChain,
    JordanDecomposition, JordanMatrices,
};
pub use linalg::{det, normalize_complex_vector, null_space, primitive_integer_vector, rank, solve};
pub use matrix::Matrix;
pub use poly::UniPoly;
pub use rational::Rational;
pub use roots::{cauchy_bound, isolate_real_roots, IsolatedRoot, RootLocation};
pub use scalar::{ExactDiv, FieldScalar, Ring};
pub use spectral::{
    analyze, analyze_with, eigenspace, eigenspace_with, eigenvalues, eigenvector_overlap,
    Backend, Eigenvalue, NumericOpts, SpectralReport, SpectralValue, VectorRepr, MAX_DIM,
};
pub use sweep::{critical_points, sweep, Branch, CriticalKind, CriticalPoint, MAX_STEPS};
pub use symmetry::{
    check_eigenvector_symmetry, invariance_group, label_group, perm_matrix, GroupLabel, Perm,
    SymmetryGroup,
};
