//! Numeric geometry of the quadric Z and its chart.
//!
//! Points of Z = { -|z^0|^2 + sum_k |z^k|^2 = 1 } are sampled by choosing
//! the outer coordinates freely, rescaling their norm to 1 + s, and giving
//! z^0 modulus sqrt(s), so the defining equation holds to rounding error.
//! Evaluation of polynomials upstairs and reduced elements downstairs at
//! such points is the numeric ground truth the exact algebra is checked
//! against.
//!
//! The chart sends a complexified pair (x, y) with -x^0 y^0 + x'.y' = 1 to
//! (u, v) = (y'/y^0, x'/x^0), where x^0 y^0 (u.v - 1) = 1. A lifted basis
//! monomial becomes (-1)^M v^P u^Q / (1 - u.v)^M with M = max(|P|, |Q|),
//! singular exactly on u.v = 1.

use num_complex::Complex64;

use crate::multiindex::MultiIndex;
use crate::rng::SplitMix64;

use super::cn::CnPolynomial;
use super::element::{DiscElement, DiscIndex};
use super::restrict::quantum_factor;
use super::DiscError;

/// Distance from u.v to 1 below which chart evaluation is refused.
pub const CHART_TOLERANCE: f64 = 1e-12;

/// A numeric point of the quadric Z in C^{n+1}.
#[derive(Clone, Debug)]
pub struct ZPoint {
    coords: Vec<Complex64>,
}

impl ZPoint {
    pub fn new(coords: Vec<Complex64>) -> Self {
        assert!(coords.len() >= 2, "need at least z^0 and z^1");
        ZPoint { coords }
    }

    pub fn n(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    /// -|z^0|^2 + sum_k |z^k|^2; equals 1 on Z.
    pub fn metric_value(&self) -> f64 {
        let mut acc = -self.coords[0].norm_sqr();
        for z in &self.coords[1..] {
            acc += z.norm_sqr();
        }
        acc
    }

    /// The point e^{i theta} z, still on Z.
    pub fn rotate(&self, theta: f64) -> ZPoint {
        let phase = Complex64::from_polar(1.0, theta);
        ZPoint {
            coords: self.coords.iter().map(|z| z * phase).collect(),
        }
    }
}

/// Deterministic sample of a point on Z: outer coordinates are drawn
/// uniformly, rescaled so their norm square is 1 + s with s in (0.3, 1.2),
/// and z^0 gets modulus sqrt(s) with a random phase.
pub fn sample_z_point(n: usize, rng: &mut SplitMix64) -> ZPoint {
    assert!(n >= 1);
    let mut outer: Vec<Complex64>;
    let mut norm_sq: f64;
    loop {
        outer = (0..n)
            .map(|_| Complex64::new(2.0 * rng.next_f64() - 1.0, 2.0 * rng.next_f64() - 1.0))
            .collect();
        norm_sq = outer.iter().map(|z| z.norm_sqr()).sum();
        if norm_sq > 0.1 {
            break;
        }
    }
    let s = 0.3 + 0.9 * rng.next_f64();
    let scale = ((1.0 + s) / norm_sq).sqrt();
    let phi = 2.0 * std::f64::consts::PI * rng.next_f64();
    let mut coords = Vec::with_capacity(n + 1);
    coords.push(Complex64::from_polar(s.sqrt(), phi));
    coords.extend(outer.into_iter().map(|z| z * scale));
    ZPoint::new(coords)
}

/// z^k for complex z by binary exponentiation; branch-free and
/// deterministic across platforms.
pub(crate) fn cpow(z: Complex64, k: u32) -> Complex64 {
    let mut base = z;
    let mut e = k;
    let mut acc = Complex64::new(1.0, 0.0);
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

fn monomial_value(coords: &[Complex64], p: &MultiIndex, q: &MultiIndex) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for (k, z) in coords.iter().enumerate() {
        acc *= cpow(*z, p[k]);
        acc *= cpow(z.conj(), q[k]);
    }
    acc
}

/// Value of a polynomial on C^{n+1} at a point, with coefficients taken at
/// the given parameter value.
pub fn eval_cn(a: &CnPolynomial, pt: &ZPoint, hbar: Complex64) -> Result<Complex64, DiscError> {
    if a.n() != pt.n() {
        return Err(DiscError::DimensionMismatch {
            left: a.n(),
            right: pt.n(),
            context: "eval_cn",
        });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for ((p, q), c) in a.terms() {
        acc += c.evaluate_numeric(hbar)? * monomial_value(pt.coords(), p, q);
    }
    Ok(acc)
}

/// Value of a reduced element at a point of Z, through the canonical lift
/// of each basis index.
pub fn eval_disc(x: &DiscElement, pt: &ZPoint, hbar: Complex64) -> Result<Complex64, DiscError> {
    if x.n() != pt.n() {
        return Err(DiscError::DimensionMismatch {
            left: x.n(),
            right: pt.n(),
            context: "eval_disc",
        });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for (idx, c) in x.terms() {
        let (p, q) = idx.canonical_lift();
        acc += c.evaluate_numeric(hbar)? * monomial_value(pt.coords(), &p, &q);
    }
    Ok(acc)
}

/// Value of the parameter-dependent restriction of an invariant polynomial
/// at a point of Z, computed without the basis expansion: each monomial is
/// scaled by pi_{|A|}(h) and evaluated directly. An independent route for
/// cross-checking the exact restriction-plus-product machinery.
///
/// Only monomials in canonical position (no matched 0-th powers) admit
/// this per-term evaluation; a matched pair reduces through the deformed
/// quadric relation, which is not a pointwise identity on Z away from
/// parameter 0, so such inputs are refused.
pub fn eval_quantum_restriction_direct(
    a: &CnPolynomial,
    pt: &ZPoint,
    hbar: Complex64,
) -> Result<Complex64, DiscError> {
    if !a.is_invariant() {
        return Err(DiscError::NotInvariant);
    }
    if a.n() != pt.n() {
        return Err(DiscError::DimensionMismatch {
            left: a.n(),
            right: pt.n(),
            context: "eval_quantum_restriction_direct",
        });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for ((p, q), c) in a.terms() {
        if p[0] > 0 && q[0] > 0 {
            return Err(DiscError::NotCanonical);
        }
        let pi = quantum_factor(p.total()).evaluate_numeric(hbar)?;
        acc += c.evaluate_numeric(hbar)? * pi * monomial_value(pt.coords(), p, q);
    }
    Ok(acc)
}

/// Chart coordinates of a complexified pair: (u, v) = (y'/y^0, x'/x^0).
pub fn chart_coordinates(
    x: &[Complex64],
    y: &[Complex64],
) -> Result<(Vec<Complex64>, Vec<Complex64>), DiscError> {
    assert_eq!(x.len(), y.len());
    if x[0].norm() < CHART_TOLERANCE || y[0].norm() < CHART_TOLERANCE {
        return Err(DiscError::ChartSingularity);
    }
    let v = x[1..].iter().map(|z| z / x[0]).collect();
    let u = y[1..].iter().map(|z| z / y[0]).collect();
    Ok((u, v))
}

/// Value of the lifted basis monomial x^P y^Q (canonical lift of idx) at a
/// complexified pair.
pub fn eval_lifted_monomial(idx: &DiscIndex, x: &[Complex64], y: &[Complex64]) -> Complex64 {
    let (p, q) = idx.canonical_lift();
    let mut acc = Complex64::new(1.0, 0.0);
    for k in 0..x.len() {
        acc *= cpow(x[k], p[k]);
        acc *= cpow(y[k], q[k]);
    }
    acc
}

/// Chart form of a basis element: (-1)^M v^P u^Q / (1 - u.v)^M with
/// M = max(|P|, |Q|).
pub fn fhat_eval(
    idx: &DiscIndex,
    u: &[Complex64],
    v: &[Complex64],
) -> Result<Complex64, DiscError> {
    let n = idx.dim();
    assert_eq!(u.len(), n);
    assert_eq!(v.len(), n);
    let m = idx.p.total().max(idx.q.total());
    let dot: Complex64 = u.iter().zip(v.iter()).map(|(a, b)| a * b).sum();
    let denom_base = Complex64::new(1.0, 0.0) - dot;
    if m > 0 && denom_base.norm() < CHART_TOLERANCE {
        return Err(DiscError::ChartSingularity);
    }
    let mut acc = Complex64::new(1.0, 0.0);
    for k in 0..n {
        acc *= cpow(v[k], idx.p[k]);
        acc *= cpow(u[k], idx.q[k]);
    }
    if m % 2 == 1 {
        acc = -acc;
    }
    Ok(acc / cpow(denom_base, m))
}

/// Chart form of a whole element, coefficients taken at the given
/// parameter value.
pub fn fhat_eval_element(
    a: &DiscElement,
    u: &[Complex64],
    v: &[Complex64],
    hbar: Complex64,
) -> Result<Complex64, DiscError> {
    let mut acc = Complex64::new(0.0, 0.0);
    for (idx, c) in a.terms() {
        acc += c.evaluate_numeric(hbar)? * fhat_eval(idx, u, v)?;
    }
    Ok(acc)
}
