//! Randomized invariants. Each property is a statement that must hold for
//! *every* input, checked here over generated matrices and parameters:
//! symbolic and pointwise routes agree, multiplicities add up, complex
//! spectra stay conjugation-closed, similarity transforms preserve block
//! structure, and the sweep agrees with exact per-point spectra.

use epscan::{
    analyze, char_poly, char_poly_family, eigenvalues, invariance_group, jordan_decomposition,
    perm_matrix, sweep, AffineFamily, CplxF, JordanMatrices, Matrix, Perm, Rational,
};
use proptest::prelude::*;

fn r(n: i64) -> Rational {
    Rational::from_int(n)
}

fn rq(p: i64, q: i64) -> Rational {
    Rational::new(p, q).unwrap()
}

/// Small integer matrices: harsh enough to hit repeated and complex
/// eigenvalues regularly, small enough to keep exact arithmetic quick.
fn int_matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(-3i64..=3, n * n)
        .prop_map(move |v| Matrix::new(n, v.into_iter().map(r).collect()).unwrap())
}

fn rational_beta() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=8).prop_map(|(p, q)| rq(p, q))
}

fn family(n: usize) -> impl Strategy<Value = AffineFamily> {
    (int_matrix(n), int_matrix(n)).prop_map(|(a, b)| AffineFamily::new(a, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn specializing_the_pencil_commutes_with_evaluating_the_family(
        fam in prop_oneof![family(2), family(3)],
        beta in rational_beta(),
    ) {
        let symbolic = char_poly_family(&fam).specialize(&beta);
        let pointwise = char_poly(&fam.at(&beta));
        prop_assert_eq!(symbolic, pointwise);
    }

    #[test]
    fn charpoly_reads_trace_and_determinant(m in prop_oneof![int_matrix(2), int_matrix(3), int_matrix(4)]) {
        let n = m.dim();
        let p = char_poly(&m);
        prop_assert_eq!(p.degree(), Some(n));
        prop_assert_eq!(p.coeff(n - 1), -m.trace());
        let det = epscan::det(&m);
        let signed = if n % 2 == 0 { det } else { -det };
        prop_assert_eq!(p.coeff(0), signed);
    }

    #[test]
    fn multiplicities_add_up_and_bound_each_other(m in prop_oneof![int_matrix(2), int_matrix(3)]) {
        let report = analyze(&m).unwrap();
        let total: usize = report.eigenvalues.iter().map(|e| e.alg_mult).sum();
        prop_assert_eq!(total, m.dim());
        for e in &report.eigenvalues {
            prop_assert!(e.geo_mult >= 1);
            prop_assert!(e.geo_mult <= e.alg_mult);
        }
    }

    #[test]
    fn complex_spectra_are_closed_under_conjugation(m in prop_oneof![int_matrix(2), int_matrix(3)]) {
        let flat: Vec<CplxF> = eigenvalues(&m)
            .unwrap()
            .into_iter()
            .flat_map(|(v, k)| std::iter::repeat(v.to_cplx()).take(k))
            .collect();
        // non-real values appear in bit-exact mirror pairs
        let mut unmatched: Vec<CplxF> = flat.iter().copied().filter(|v| v.im() != 0.0).collect();
        while let Some(v) = unmatched.pop() {
            let partner = unmatched
                .iter()
                .position(|w| *w == v.conj());
            prop_assert!(partner.is_some(), "no conjugate for {v}");
            unmatched.swap_remove(partner.unwrap());
        }
    }

    #[test]
    fn eigenvectors_annihilate_their_shifted_matrix(m in prop_oneof![int_matrix(2), int_matrix(3)]) {
        let report = analyze(&m).unwrap();
        let mc = m.to_complex();
        let scale = mc.inf_norm().max(1.0);
        for e in &report.eigenvalues {
            prop_assert_eq!(e.eigenspace.len(), e.geo_mult);
            for v in &e.eigenspace {
                let vc = v.to_complex();
                let lam = e.value.to_cplx();
                let hv = mc.mul_vec(&vc);
                let worst = hv
                    .iter()
                    .zip(&vc)
                    .map(|(a, b)| (*a - *b * lam).abs())
                    .fold(0.0, f64::max);
                prop_assert!(worst <= 1e-8 * scale, "residual {worst}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn jordan_decomposition_reconstructs_the_matrix(m in prop_oneof![int_matrix(2), int_matrix(3)]) {
        let dec = jordan_decomposition(&m).unwrap();
        let sizes: usize = dec.block_structure.iter().map(|(_, s)| s).sum();
        prop_assert_eq!(sizes, m.dim());
        let report = analyze(&m).unwrap();
        prop_assert_eq!(dec.is_diagonal(), report.defective().count() == 0);
        match &dec.matrices {
            JordanMatrices::Exact { s, j } => {
                prop_assert_eq!(m.mul(s).unwrap(), s.mul(j).unwrap());
            }
            JordanMatrices::Numeric { s, j } => {
                let mc = m.to_complex();
                let lhs = mc.mul(s).unwrap();
                let rhs = s.mul(j).unwrap();
                let scale = mc.inf_norm().max(1.0) * s.inf_norm().max(1.0);
                let worst = lhs.sub(&rhs).unwrap().inf_norm();
                prop_assert!(worst <= 1e-7 * scale, "residual {worst}");
            }
        }
    }

    #[test]
    fn symmetrized_matrices_admit_their_symmetry(
        m in int_matrix(4),
        images in Just(vec![1usize, 2, 3, 0]),
        shift in 0usize..4,
    ) {
        // average the matrix over the cyclic group generated by a power of
        // a 4-cycle; the result must be invariant under that generator
        let four_cycle = Perm::new(images).unwrap();
        let mut p = four_cycle.clone();
        for _ in 0..shift {
            p = p.then(&four_cycle);
        }
        let mut acc = Matrix::zero(4);
        let mut q = Perm::identity(4);
        let mut count = 0i64;
        loop {
            let u = perm_matrix(&q);
            acc = acc.add(&u.transpose().mul(&m).unwrap().mul(&u).unwrap()).unwrap();
            count += 1;
            q = q.then(&p);
            if q.is_identity() {
                break;
            }
        }
        let sym = acc.scale(&rq(1, count));
        let group = invariance_group(&sym).unwrap();
        prop_assert!(group.elements.contains(&p), "the averaging cycle survives");
        // the invariance group contains the cyclic group we averaged over
        prop_assert_eq!(group.order() % count as usize, 0);
    }

    #[test]
    fn relabeling_preserves_group_order_and_label(seed in 0usize..24) {
        // conjugating the symmetric crossing matrix by any permutation
        // relabels indices; the symmetry group must not change shape
        let h = AffineFamily::preset("paper").unwrap().at(&r(1));
        let perms: Vec<Perm> = all_perms(3);
        let sigma = &perms[seed % perms.len()];
        let u = perm_matrix(sigma);
        let conj = u.transpose().mul(&h).unwrap().mul(&u).unwrap();
        let g = invariance_group(&conj).unwrap();
        prop_assert_eq!(g.order(), 6);
        prop_assert_eq!(g.label.to_string(), "S3");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn sweep_agrees_with_exact_pointwise_spectra(
        fam in prop_oneof![family(2), family(3)],
        lo in -4.0f64..3.0,
        span in 0.5f64..2.0,
    ) {
        let steps = 5;
        let branches = sweep(&fam, lo, lo + span, steps).unwrap();
        prop_assert_eq!(branches.len(), fam.dim());
        for idx in 0..steps {
            let beta = branches[0].samples[idx].0;
            let mut swept: Vec<CplxF> = branches.iter().map(|b| b.samples[idx].1).collect();
            let mut exact: Vec<CplxF> = eigenvalues(&fam.at(&Rational::from_f64_exact(beta).unwrap()))
                .unwrap()
                .into_iter()
                .flat_map(|(v, k)| std::iter::repeat(v.to_cplx()).take(k))
                .collect();
            swept.sort_by(CplxF::sort_cmp);
            exact.sort_by(CplxF::sort_cmp);
            for (a, b) in swept.iter().zip(&exact) {
                prop_assert!((*a - *b).abs() < 1e-9, "beta = {}: {} vs {}", beta, a, b);
            }
        }
    }

    #[test]
    fn gap_scaling_is_square_root_past_the_coalescence(eps in 1e-8f64..1e-2) {
        let beta = &rq(-5, 4) + &Rational::from_f64_exact(eps).unwrap();
        let vals = eigenvalues(&AffineFamily::preset("paper").unwrap().at(&beta)).unwrap();
        let mut res: Vec<f64> = vals
            .iter()
            .flat_map(|(v, k)| std::iter::repeat(v.to_cplx().re()).take(*k))
            .collect();
        prop_assert_eq!(res.len(), 3);
        res.sort_by(f64::total_cmp);
        let gap = res[2] - res[1];
        let predicted = 2.0 * eps.sqrt();
        prop_assert!(
            (gap - predicted).abs() <= 1e-9 * predicted.max(1e-12),
            "gap {gap} vs 2√ε {predicted}"
        );
    }
}

fn all_perms(n: usize) -> Vec<Perm> {
    use itertools::Itertools;
    (0..n)
        .permutations(n)
        .map(|im| Perm::new(im).unwrap())
        .collect()
}
