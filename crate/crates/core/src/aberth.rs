//! Simultaneous polynomial root refinement (Aberth-Ehrlich).
//!
//! This is the only place floating-point root *finding* happens. It runs on
//! residual factors that are already square-free with every rational root
//! deflated out exactly, so the targets are simple roots, the friendliest
//! case for the iteration. Results are gated by a residual bound before
//! anyone sees them; non-convergence is an error carrying the residuals,
//! never a silent bad answer.

use crate::complex::CplxF;
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::Rational;

use num_complex::Complex64;

const MAX_ITER: usize = 200;
const STEP_EPS: f64 = 1e-14;
// noise floor separating "numerically real" from genuinely complex; the
// residual gate below is what actually vouches for the values
const IM_FLOOR_REL: f64 = 1e-10;
const PAIR_RADIUS_REL: f64 = 1e-6;

fn eval(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// All complex roots of a square-free real polynomial of degree >= 1, as
/// bit-exact conjugate pairs plus reals, unsorted. Errors if the iteration
/// fails its residual gate `|p(z)| <= 1e-8 (1+|z|)^n`.
pub(crate) fn aberth_roots(p: &UniPoly<Rational>) -> Result<Vec<CplxF>> {
    aberth_roots_f64(&p.monic().coeffs_f64())
}

/// Same iteration on raw ascending coefficients with nonzero leading term.
pub(crate) fn aberth_roots_f64(raw: &[f64]) -> Result<Vec<CplxF>> {
    let n = raw.len() - 1;
    debug_assert!(n >= 1 && raw[n] != 0.0);
    let coeffs: Vec<f64> = raw.iter().map(|c| c / raw[n]).collect();
    let dcoeffs: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| k as f64 * c)
        .collect();

    // initial guesses on a circle inside the root bound, angle-offset so no
    // guess starts on an axis (real-axis symmetry can stall the iteration)
    let bound = 1.0 + coeffs.iter().take(n).fold(0.0f64, |m, c| m.max(c.abs()));
    let radius = 0.7 * bound;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.43;
            Complex64::new(radius * theta.cos(), radius * theta.sin())
        })
        .collect();

    let mut iterations = 0;
    for iter in 0..MAX_ITER {
        iterations = iter + 1;
        let mut worst_step = 0.0f64;
        for i in 0..n {
            let pv = eval(&coeffs, z[i]);
            let dv = eval(&dcoeffs, z[i]);
            let w = if dv.norm() == 0.0 {
                // sitting on a critical point: nudge instead of dividing
                Complex64::new(STEP_EPS, STEP_EPS)
            } else {
                pv / dv
            };
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 0.0 {
                        s += d.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * s;
            let step = if denom.norm() < 1e-12 { w } else { w / denom };
            z[i] -= step;
            let rel = step.norm() / (1.0 + z[i].norm());
            worst_step = worst_step.max(rel);
        }
        if worst_step <= STEP_EPS {
            break;
        }
    }

    let residuals: Vec<f64> = z.iter().map(|&zi| eval(&coeffs, zi).norm()).collect();
    let gate = |zi: Complex64| 1e-8 * (1.0 + zi.norm()).powi(n as i32);
    let worst_ratio = z
        .iter()
        .zip(&residuals)
        .map(|(&zi, &r)| r / gate(zi))
        .fold(0.0, f64::max);
    if worst_ratio > 1.0 {
        return Err(Error::RootFinderDiverged {
            iterations,
            worst_residual: residuals.iter().cloned().fold(0.0, f64::max),
            residuals,
        });
    }

    symmetrize_conjugates(&mut z, iterations, &residuals)?;
    Ok(z
        .into_iter()
        .map(|c| CplxF::raw(c.re, c.im))
        .collect())
}

/// Real coefficients force the true root multiset to be conjugate-closed.
/// Snap tiny imaginary parts to zero, then average each complex root with
/// its partner so the pairing holds bit-exactly. A nonreal root with no
/// partner in reach means the values themselves are wrong, which is a
/// divergence, not something to paper over.
fn symmetrize_conjugates(
    z: &mut [Complex64],
    iterations: usize,
    residuals: &[f64],
) -> Result<()> {
    let n = z.len();
    for zi in z.iter_mut() {
        if zi.im.abs() <= IM_FLOOR_REL * (1.0 + zi.norm()) {
            zi.im = 0.0;
        }
    }
    let mut used = vec![false; n];
    for i in 0..n {
        if used[i] || z[i].im <= 0.0 {
            continue;
        }
        let mut best: Option<(usize, f64)> = None;
        for j in 0..n {
            if j == i || used[j] || z[j].im >= 0.0 {
                continue;
            }
            let d = (z[i] - z[j].conj()).norm();
            if best.is_none_or(|(_, bd)| d < bd) {
                best = Some((j, d));
            }
        }
        match best {
            Some((j, d)) if d <= PAIR_RADIUS_REL * (1.0 + z[i].norm()) => {
                let re = 0.5 * (z[i].re + z[j].re);
                let im = 0.5 * (z[i].im - z[j].im);
                z[i] = Complex64::new(re, im);
                z[j] = Complex64::new(re, -im);
                used[i] = true;
                used[j] = true;
            }
            _ => {
                return Err(Error::RootFinderDiverged {
                    iterations,
                    worst_residual: z[i].im.abs(),
                    residuals: residuals.to_vec(),
                });
            }
        }
    }
    // leftover roots with im < 0 and no im > 0 partner
    if z.iter()
        .enumerate()
        .any(|(i, zi)| !used[i] && zi.im != 0.0 && zi.im < 0.0)
    {
        let bad = z.iter().map(|zi| zi.im.abs()).fold(0.0, f64::max);
        return Err(Error::RootFinderDiverged {
            iterations,
            worst_residual: bad,
            residuals: residuals.to_vec(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(coeffs: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_int(c))
                .collect::<Vec<_>>(),
        )
    }

    fn sorted(mut roots: Vec<CplxF>) -> Vec<CplxF> {
        roots.sort_by(CplxF::sort_cmp);
        roots
    }

    #[test]
    fn cubic_with_known_roots() {
        // (x-1)(x-2)(x-3)
        let roots = sorted(aberth_roots(&rp(&[-6, 11, -6, 1])).unwrap());
        for (root, expect) in roots.iter().zip([1.0, 2.0, 3.0]) {
            assert!((root.re() - expect).abs() < 1e-10);
            assert_eq!(root.im(), 0.0);
        }
    }

    #[test]
    fn conjugate_pair_is_bit_exact() {
        // (x^2+x+1)(x-2): roots -1/2 +- i sqrt(3)/2 and 2
        let roots = sorted(aberth_roots(&rp(&[-2, -1, -1, 1])).unwrap());
        assert_eq!(roots[0].re(), roots[1].re());
        assert_eq!(roots[0].im(), -roots[1].im());
        assert!((roots[0].re() + 0.5).abs() < 1e-10);
        assert!((roots[0].im() + 0.75f64.sqrt()).abs() < 1e-10);
        assert!((roots[2].re() - 2.0).abs() < 1e-10);
    }

    #[test]
    fn quintic_conjugate_closure() {
        // (x^2+1)(x^2+4)(x-1)
        let p = rp(&[1, 0, 1]).mul(&rp(&[4, 0, 1])).mul(&rp(&[-1, 1]));
        let roots = sorted(aberth_roots(&p).unwrap());
        for (re, im) in [(0.0, -2.0), (0.0, -1.0), (0.0, 1.0), (0.0, 2.0), (1.0, 0.0)] {
            assert!(
                roots
                    .iter()
                    .any(|r| (r.re() - re).abs() < 1e-10 && (r.im() - im).abs() < 1e-10),
                "missing root {re}+{im}i in {roots:?}"
            );
        }
        // conjugate closure is bit-exact, not merely approximate
        for r in &roots {
            assert!(roots.iter().any(|s| s.re() == r.re() && s.im() == -r.im()));
        }
    }

    #[test]
    fn close_real_roots_stay_real_and_distinct() {
        let a = Rational::new(1, 1_000_000).unwrap();
        // x (x - 1e-6) (x - 2)
        let p = UniPoly::new(vec![Rational::zero(), Rational::one()])
            .mul(&UniPoly::new(vec![-a, Rational::one()]))
            .mul(&rp(&[-2, 1]));
        let roots = sorted(aberth_roots(&p).unwrap());
        assert!(roots.iter().all(|r| r.im() == 0.0));
        assert!((roots[1].re() - 1e-6).abs() < 1e-12);
        assert!(roots[0].re().abs() < 1e-12);
    }
}
