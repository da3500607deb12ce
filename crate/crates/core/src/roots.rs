//! Certified real-root isolation for rational polynomials.
//!
//! Every claim leaving this module is exact: a root is either a rational
//! number the polynomial provably vanishes at, or an open interval with
//! rational endpoints that a Sturm count certifies to contain exactly one
//! real root. Nothing downstream has to trust a floating-point root list.
//!
//! The pipeline per polynomial: square-free decomposition for
//! multiplicities, Cauchy bound, Sturm bisection until each interval holds
//! one root, then a rational-root pin. The pin works without factoring any
//! integers: after clearing denominators a monic integer polynomial has
//! only integer roots, so the rational roots of the original are confined
//! to the grid k/D with D the coefficient-denominator lcm. Shrinking an
//! isolating interval below the grid spacing leaves at most one candidate,
//! and one exact evaluation settles it. This stays cheap even when D has
//! hundreds of bits, where a divisor-enumeration test would be hopeless.

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::{lcm_big, Rational};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Where a real root lives: an exact rational, or an open isolating
/// interval with a sign change at the endpoints.
#[derive(Clone, Debug, PartialEq)]
pub enum RootLocation {
    Exact(Rational),
    Interval { lo: Rational, hi: Rational },
}

impl RootLocation {
    /// Exact value, or the interval midpoint.
    pub fn midpoint(&self) -> Rational {
        match self {
            RootLocation::Exact(v) => v.clone(),
            RootLocation::Interval { lo, hi } => (lo + hi) / Rational::from_int(2),
        }
    }

    pub fn approx(&self) -> f64 {
        self.midpoint().to_f64()
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            RootLocation::Exact(v) => Some(v),
            RootLocation::Interval { .. } => None,
        }
    }

    fn lower(&self) -> &Rational {
        match self {
            RootLocation::Exact(v) => v,
            RootLocation::Interval { lo, .. } => lo,
        }
    }

    fn upper(&self) -> &Rational {
        match self {
            RootLocation::Exact(v) => v,
            RootLocation::Interval { hi, .. } => hi,
        }
    }
}

/// One real root of a polynomial with its multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct IsolatedRoot {
    pub location: RootLocation,
    pub multiplicity: usize,
}

/// Sturm chain of a square-free polynomial: p, p', then negated remainders.
/// Each member is scaled to primitive integer coefficients (positive scale
/// only, which preserves every sign and keeps coefficient growth in check).
pub(crate) struct SturmChain {
    seq: Vec<UniPoly<Rational>>,
}

impl SturmChain {
    pub(crate) fn new(p: &UniPoly<Rational>) -> Self {
        let mut seq = vec![positive_primitive(p), positive_primitive(&p.derivative())];
        loop {
            let k = seq.len();
            if seq[k - 1].is_zero() {
                seq.pop();
                break;
            }
            let (_, rem) = seq[k - 2]
                .div_rem(&seq[k - 1])
                .expect("nonzero divisor checked above");
            if rem.is_zero() {
                break;
            }
            seq.push(positive_primitive(&rem.neg()));
        }
        SturmChain { seq }
    }

    fn sign_changes_at(&self, x: &Rational) -> usize {
        let mut changes = 0;
        let mut last = 0i8;
        for p in &self.seq {
            let s = p.sign_at(x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Number of distinct real roots in `(lo, hi]`. Endpoints must not be
    /// roots of the chain's polynomial.
    pub(crate) fn count_in(&self, lo: &Rational, hi: &Rational) -> usize {
        debug_assert!(lo < hi);
        let a = self.sign_changes_at(lo);
        let b = self.sign_changes_at(hi);
        debug_assert!(a >= b, "sign-change count must be monotone");
        a - b
    }
}

/// Positive-scalar rescale to coprime integer coefficients. Sign-preserving,
/// so safe inside sign-sensitive sequences.
fn positive_primitive(p: &UniPoly<Rational>) -> UniPoly<Rational> {
    if p.is_zero() {
        return p.clone();
    }
    let mut den = BigInt::one();
    let mut num_gcd = BigInt::zero();
    for c in p.coeffs() {
        den = lcm_big(&den, c.denom());
    }
    for c in p.coeffs() {
        let scaled = c * &Rational::from_int(den.clone());
        num_gcd = num_gcd.gcd(scaled.numer());
    }
    let factor = Rational::new(den, num_gcd).expect("nonzero gcd for nonzero polynomial");
    p.scale(&factor)
}

/// Strict upper bound on the magnitude of every complex root:
/// `1 + max |a_i| / |a_n|`.
pub fn cauchy_bound(p: &UniPoly<Rational>) -> Rational {
    let n = p.degree().expect("nonzero polynomial");
    let lead = p.leading().unwrap().abs();
    let mut worst = Rational::zero();
    for k in 0..n {
        let m = p.coeff(k).abs();
        if m > worst {
            worst = m;
        }
    }
    Rational::one() + worst / lead
}

/// All real roots of `q` with multiplicities, sorted ascending and pairwise
/// separated: every exact value and interval endpoint ordering is strict.
/// Interval widths end below 2^-40.
pub fn isolate_real_roots(q: &UniPoly<Rational>) -> Result<Vec<IsolatedRoot>> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if q.degree() == Some(0) {
        return Ok(vec![]);
    }
    // factor -> (square-free polynomial, multiplicity, roots so far)
    let mut tagged: Vec<(UniPoly<Rational>, usize, RootLocation)> = vec![];
    for (factor, mult) in q.square_free_decomposition() {
        if factor.degree() == Some(0) {
            continue;
        }
        for loc in isolate_square_free(&factor) {
            tagged.push((factor.clone(), mult, loc));
        }
    }
    separate(&mut tagged);
    Ok(tagged
        .into_iter()
        .map(|(_, multiplicity, location)| IsolatedRoot {
            location,
            multiplicity,
        })
        .collect())
}

/// Roots of different square-free factors are distinct numbers, but their
/// isolating intervals may still overlap. Refine until the reported
/// locations are strictly ordered.
fn separate(tagged: &mut [(UniPoly<Rational>, usize, RootLocation)]) {
    for _round in 0..10_000 {
        tagged.sort_by(|a, b| a.2.midpoint().cmp(&b.2.midpoint()));
        let mut clean = true;
        for i in 0..tagged.len().saturating_sub(1) {
            if tagged[i].2.upper() < tagged[i + 1].2.lower() {
                continue;
            }
            clean = false;
            for j in [i, i + 1] {
                let (f, _, loc) = &mut tagged[j];
                if let RootLocation::Interval { lo, hi } = loc.clone() {
                    *loc = bisect_step(f, lo, hi);
                }
            }
        }
        if clean {
            return;
        }
    }
    panic!("isolating intervals failed to separate; duplicate root across square-free factors");
}

/// One sign-change bisection step; collapses to `Exact` on a midpoint hit.
fn bisect_step(f: &UniPoly<Rational>, lo: Rational, hi: Rational) -> RootLocation {
    let mid = (&lo + &hi) / Rational::from_int(2);
    let sm = f.sign_at(&mid);
    if sm == 0 {
        return RootLocation::Exact(mid);
    }
    if f.sign_at(&lo) * sm < 0 {
        RootLocation::Interval { lo, hi: mid }
    } else {
        RootLocation::Interval { lo: mid, hi }
    }
}

/// Shrinks a sign-change interval below `width`, or pins the root exactly.
/// Pre: `f(lo)` and `f(hi)` are nonzero with opposite signs.
pub(crate) fn refine_interval(
    f: &UniPoly<Rational>,
    mut lo: Rational,
    mut hi: Rational,
    width: &Rational,
) -> RootLocation {
    debug_assert!(f.sign_at(&lo) * f.sign_at(&hi) < 0);
    while (&hi - &lo) >= *width {
        match bisect_step(f, lo.clone(), hi.clone()) {
            RootLocation::Exact(v) => return RootLocation::Exact(v),
            RootLocation::Interval { lo: l, hi: h } => {
                lo = l;
                hi = h;
            }
        }
    }
    RootLocation::Interval { lo, hi }
}

/// Real roots of a square-free polynomial: Sturm bisection to isolation,
/// then refinement and the k/D rational pin. Unsorted.
fn isolate_square_free(factor: &UniPoly<Rational>) -> Vec<RootLocation> {
    let mut f = factor.monic();
    let mut found: Vec<RootLocation> = vec![];
    // A midpoint that evaluates to zero is an exact root; rather than track
    // root-at-endpoint conventions through the Sturm count, deflate it out
    // and restart on the quotient. Degree drops each time, so this ends.
    'restart: loop {
        let deg = f.degree().expect("monic, hence nonzero");
        if deg == 0 {
            break;
        }
        let chain = SturmChain::new(&f);
        let bound = cauchy_bound(&f);
        let mut work = vec![(-bound.clone(), bound)];
        let mut isolated = vec![];
        while let Some((lo, hi)) = work.pop() {
            match chain.count_in(&lo, &hi) {
                0 => {}
                1 => isolated.push((lo, hi)),
                _ => {
                    let mid = (&lo + &hi) / Rational::from_int(2);
                    if f.sign_at(&mid) == 0 {
                        found.push(RootLocation::Exact(mid.clone()));
                        let lin = UniPoly::new(vec![-mid, Rational::one()]);
                        f = f.div_rem(&lin).expect("nonzero divisor").0;
                        continue 'restart;
                    }
                    work.push((lo, mid.clone()));
                    work.push((mid, hi));
                }
            }
        }
        let width = pin_width(&f);
        for (lo, hi) in isolated {
            found.push(pin_rational(&f, refine_interval(&f, lo, hi, &width)));
        }
        break;
    }
    found
}

/// Interval width that leaves at most one rational-root candidate inside:
/// half the k/D grid spacing, capped at 2^-40 per the reporting contract.
fn pin_width(f: &UniPoly<Rational>) -> Rational {
    let d = f.denominator_lcm();
    let grid_half = Rational::new(1, d * BigInt::from(2)).expect("positive lcm");
    let cap = Rational::new(1, BigInt::from(1u64 << 40)).unwrap();
    grid_half.min(cap)
}

/// Tests the unique k/D grid point inside the interval, if any. The
/// interval width is already below the grid spacing, so at most one
/// candidate exists; anything else means the root is irrational.
fn pin_rational(f: &UniPoly<Rational>, loc: RootLocation) -> RootLocation {
    let RootLocation::Interval { lo, hi } = &loc else {
        return loc;
    };
    let d = f.denominator_lcm();
    // smallest k with k/D > lo
    let k = (lo * &Rational::from_int(d.clone())).floor_int() + BigInt::one();
    let candidate = Rational::new(k, d).expect("positive lcm");
    if &candidate < hi && f.sign_at(&candidate) == 0 {
        return RootLocation::Exact(candidate);
    }
    loc
}
