//! Recovery of reduced-basis coefficients by contour sums in the chart.
//!
//! Against the chart form fhat[P|Q] = (-1)^M v^P u^Q / (1 - u.v)^M the
//! dual kernel is
//!
//! ```text
//! K[P|Q](u, v) = (-1)^M (1 - u.v)^{M-1} / (v^{P+1} u^{Q+1}),
//! ```
//!
//! M = max(|P|, |Q|): expanding (1 - u.v)^{M'-1-M} in the residue
//! computation, a same-charge pair (P+T, Q+T) meets the kernel of (P, Q)
//! in the coefficient of (u.v)^{|T|} of a polynomial of degree |T| - 1,
//! which vanishes, while the diagonal term survives with coefficient 1.
//! (The exponent M - 1, not M, is what makes the off-diagonal terms drop.)
//!
//! On the product of circles |u_k| = |v_k| = r the trapezoid rule turns
//! the normalized integral into a plain average: with w running over a
//! grid of N-th roots of unity scaled by r,
//!
//! ```text
//! a[P|Q] ~ N^{-2n} sum_grid ahat(u, v) (-1)^M (1 - u.v)^{M-1}
//!          v^{-P} u^{-Q},
//! ```
//!
//! every 2 pi i cancelling exactly. The integrand is analytic on the
//! torus while n r^2 < 1, so the average converges geometrically and the
//! grid-doubling loop stops after a few rounds.

use num_complex::Complex64;

use crate::numeric::{roots_of_unity_pow2, Fx, FxComplex};
use crate::scalar::{GaussianRational, Poly, Scalar, POLE_TOLERANCE};

use super::element::{DiscElement, DiscIndex};
use super::DiscError;

/// Arithmetic needed by the contour sums, implemented by f64 complex
/// numbers and by fixed-point complex numbers.
pub trait ContourNum: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64_real(x: f64) -> Self;
    fn from_gaussian(c: &GaussianRational) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// All n-th roots of unity for n a power of two, in cyclic order.
    fn roots_of_unity(n: u64) -> Vec<Self>;
    fn to_complex64(&self) -> Complex64;

    fn powu(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Integer power with negative exponents through division.
    fn powi(&self, k: i64) -> Self {
        if k >= 0 {
            self.powu(k as u32)
        } else {
            Self::one().div(&self.powu((-k) as u32))
        }
    }
}

impl ContourNum for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_f64_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn from_gaussian(c: &GaussianRational) -> Self {
        use num_traits::ToPrimitive;
        Complex64::new(
            c.re.to_f64().unwrap_or(f64::NAN),
            c.im.to_f64().unwrap_or(f64::NAN),
        )
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn roots_of_unity(n: u64) -> Vec<Self> {
        (0..n)
            .map(|k| {
                Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64)
            })
            .collect()
    }
    fn to_complex64(&self) -> Complex64 {
        *self
    }
}

impl ContourNum for FxComplex {
    fn zero() -> Self {
        FxComplex::zero()
    }
    fn one() -> Self {
        FxComplex::one()
    }
    fn from_f64_real(x: f64) -> Self {
        FxComplex::new(Fx::from_f64(x), Fx::zero())
    }
    fn from_gaussian(c: &GaussianRational) -> Self {
        FxComplex::new(Fx::from_big_ratio(&c.re), Fx::from_big_ratio(&c.im))
    }
    fn add(&self, o: &Self) -> Self {
        FxComplex::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        FxComplex::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        FxComplex::mul(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        FxComplex::div(self, o)
    }
    fn neg(&self) -> Self {
        FxComplex::zero().sub(self)
    }
    fn roots_of_unity(n: u64) -> Vec<Self> {
        roots_of_unity_pow2(n)
    }
    fn to_complex64(&self) -> Complex64 {
        FxComplex::to_complex64(self)
    }
}

fn eval_poly<T: ContourNum>(p: &Poly, x: &T) -> T {
    let mut acc = T::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&T::from_gaussian(c));
    }
    acc
}

fn eval_scalar<T: ContourNum>(s: &Scalar, x: &T) -> Result<T, DiscError> {
    let den = eval_poly(s.denom(), x);
    if den.to_complex64().norm() < POLE_TOLERANCE {
        return Err(DiscError::PoleAtPoint);
    }
    Ok(eval_poly(s.numer(), x).div(&den))
}

/// Controls for the contour sum.
#[derive(Clone, Debug)]
pub struct CauchyOptions {
    /// Common radius of all 2n circles.
    pub radius: f64,
    /// Parameter value at which coefficients are taken.
    pub hbar: f64,
    /// Stop when successive grid doublings agree this closely.
    pub tolerance: f64,
    /// Give up after this many doublings.
    pub max_doublings: u32,
    /// Points per circle on the first pass; a power of two.
    pub initial_grid: u64,
}

impl Default for CauchyOptions {
    fn default() -> Self {
        CauchyOptions {
            radius: 0.3,
            hbar: 0.0,
            tolerance: 1e-8,
            max_doublings: 16,
            initial_grid: 16,
        }
    }
}

/// Outcome of a converged contour sum.
#[derive(Clone, Debug)]
pub struct CauchyValue {
    pub value: Complex64,
    /// Points per circle at convergence.
    pub grid: u64,
    /// Doublings performed.
    pub doublings: u32,
}

struct Integrand<T> {
    /// Per-term data of ahat: coefficient at the parameter, P, Q, M.
    terms: Vec<(T, DiscIndex, u32)>,
    target: DiscIndex,
    target_m: u32,
}

impl<T: ContourNum> Integrand<T> {
    fn new(a: &DiscElement, idx: &DiscIndex, hbar: f64) -> Result<Self, DiscError> {
        let h = T::from_f64_real(hbar);
        let mut terms = Vec::new();
        for (term_idx, c) in a.terms() {
            let value = eval_scalar(c, &h)?;
            let m = term_idx.p.total().max(term_idx.q.total());
            terms.push((value, term_idx.clone(), m));
        }
        Ok(Integrand {
            terms,
            target: idx.clone(),
            target_m: idx.p.total().max(idx.q.total()),
        })
    }

    /// ahat(u, v) K[target](u, v) v^{P+1} u^{Q+1} d(u,v)-measure weights
    /// folded in: the full grid summand.
    fn summand(&self, u: &[T], v: &[T]) -> T {
        let mut dot = T::zero();
        for k in 0..u.len() {
            dot = dot.add(&u[k].mul(&v[k]));
        }
        let one_minus = T::one().sub(&dot);
        // ahat(u, v).
        let mut ahat = T::zero();
        for (c, idx, m) in &self.terms {
            let mut mono = c.clone();
            for k in 0..u.len() {
                mono = mono.mul(&v[k].powu(idx.p[k]));
                mono = mono.mul(&u[k].powu(idx.q[k]));
            }
            if m % 2 == 1 {
                mono = mono.neg();
            }
            ahat = ahat.add(&mono.div(&one_minus.powu(*m)));
        }
        // Kernel times the trapezoid measure factors.
        let mut kernel = one_minus.powi(self.target_m as i64 - 1);
        if self.target_m % 2 == 1 {
            kernel = kernel.neg();
        }
        for k in 0..u.len() {
            kernel = kernel.mul(&v[k].powi(-(self.target.p[k] as i64)));
            kernel = kernel.mul(&u[k].powi(-(self.target.q[k] as i64)));
        }
        ahat.mul(&kernel)
    }
}

fn grid_average<T: ContourNum>(integrand: &Integrand<T>, n: usize, grid: u64, radius: f64) -> T {
    let roots = T::roots_of_unity(grid);
    let r = T::from_f64_real(radius);
    let points: Vec<T> = roots.iter().map(|w| w.mul(&r)).collect();
    // Odometer over 2n digits base `grid`: first n digits index u, rest v.
    let mut digits = vec![0u64; 2 * n];
    let mut u = vec![T::zero(); n];
    let mut v = vec![T::zero(); n];
    let mut acc = T::zero();
    loop {
        for k in 0..n {
            u[k] = points[digits[k] as usize].clone();
            v[k] = points[digits[n + k] as usize].clone();
        }
        acc = acc.add(&integrand.summand(&u, &v));
        // Advance the odometer.
        let mut pos = 0;
        loop {
            if pos == 2 * n {
                let total = T::from_f64_real(grid as f64).powu(2 * n as u32);
                return acc.div(&total);
            }
            digits[pos] += 1;
            if digits[pos] < grid {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// Recover the coefficient of a basis element from the chart form of an
/// element by trapezoid contour sums, doubling the grid until two passes
/// agree within the tolerance.
pub fn cauchy_coefficient<T: ContourNum>(
    a: &DiscElement,
    idx: &DiscIndex,
    opts: &CauchyOptions,
) -> Result<CauchyValue, DiscError> {
    let n = a.n();
    assert_eq!(idx.dim(), n, "target index dimension mismatch");
    assert!(
        opts.initial_grid.is_power_of_two() && opts.initial_grid >= 2,
        "grid size must be a power of two"
    );
    if (n as f64) * opts.radius * opts.radius >= 1.0 {
        // The torus meets the u.v = 1 singular set.
        return Err(DiscError::ChartSingularity);
    }
    let integrand = Integrand::<T>::new(a, idx, opts.hbar)?;
    let mut grid = opts.initial_grid;
    let mut prev = grid_average(&integrand, n, grid, opts.radius);
    for doublings in 1..=opts.max_doublings {
        grid *= 2;
        let cur = grid_average(&integrand, n, grid, opts.radius);
        let delta = (cur.to_complex64() - prev.to_complex64()).norm();
        if delta < opts.tolerance {
            return Ok(CauchyValue {
                value: cur.to_complex64(),
                grid,
                doublings,
            });
        }
        prev = cur;
    }
    Err(DiscError::NoConvergence {
        doublings: opts.max_doublings,
    })
}
