//! Weighted seminorms on Sym(V).
//!
//! Fix positive weights w_1..w_d and an exponent R >= 0. Writing an element
//! as sum_P a_P e^P, the seminorm of constant-coefficient elements is
//!
//! ```text
//! p_R(a) = sum_P |P|!^R |a_P| w^P,
//! ```
//!
//! together with a sup-over-degrees variant that takes the max of the same
//! sum restricted to each homogeneous part. Values are kept exact whenever
//! the arithmetic allows: |a_P| is rational when a_P is real or purely
//! imaginary, and |P|!^R is rational when 2R is an even integer or the term
//! count cooperates (see SeminormValue).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::multiindex::{factorial, MultiIndex};
use crate::scalar::GaussianRational;
use crate::weyl::{SymElement, WeylError};

/// Weight data for the seminorm family: one positive weight per generator
/// plus the factorial exponent R.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeminormSpec {
    weights: Vec<BigRational>,
    r: BigRational,
}

impl SeminormSpec {
    pub fn new(weights: Vec<BigRational>, r: BigRational) -> Result<Self, WeylError> {
        if weights.is_empty() || weights.iter().any(|w| !w.is_positive()) {
            return Err(WeylError::BadSeminormSpec);
        }
        if r.is_negative() {
            return Err(WeylError::BadSeminormSpec);
        }
        Ok(SeminormSpec { weights, r })
    }

    /// Equal weights w in every slot.
    pub fn uniform(dim: usize, weight: BigRational, r: BigRational) -> Result<Self, WeylError> {
        Self::new(vec![weight; dim], r)
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn r(&self) -> &BigRational {
        &self.r
    }

    /// w^P as an exact rational.
    fn weight_pow(&self, idx: &MultiIndex) -> BigRational {
        let mut acc = BigRational::one();
        for (i, &p) in idx.0.iter().enumerate() {
            for _ in 0..p {
                acc *= &self.weights[i];
            }
        }
        acc
    }
}

/// A seminorm value, exact when possible.
///
/// Exact(v) is the value itself; Sqrt(s) is a value whose square is the
/// rational s (a single term with irrational modulus or factorial power);
/// Approx(x) is a hardware-float fallback for sums that mix incompatible
/// irrationals.
#[derive(Clone, Debug, PartialEq)]
pub enum SeminormValue {
    Exact(BigRational),
    Sqrt(BigRational),
    Approx(f64),
}

impl SeminormValue {
    pub fn zero() -> Self {
        SeminormValue::Exact(BigRational::zero())
    }

    pub fn as_f64(&self) -> f64 {
        match self {
            SeminormValue::Exact(v) => v.to_f64().unwrap_or(f64::INFINITY),
            SeminormValue::Sqrt(s) => s.to_f64().unwrap_or(f64::INFINITY).sqrt(),
            SeminormValue::Approx(x) => *x,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            SeminormValue::Exact(v) => v.is_zero(),
            SeminormValue::Sqrt(s) => s.is_zero(),
            SeminormValue::Approx(x) => *x == 0.0,
        }
    }

    /// Order comparison, exact whenever both sides allow it.
    pub fn compare(&self, other: &SeminormValue) -> std::cmp::Ordering {
        use SeminormValue::*;
        match (self, other) {
            (Exact(a), Exact(b)) => a.cmp(b),
            (Sqrt(a), Sqrt(b)) => a.cmp(b),
            // Values are nonnegative, so a vs sqrt(b) is a^2 vs b.
            (Exact(a), Sqrt(b)) => (a * a).cmp(b),
            (Sqrt(a), Exact(b)) => a.cmp(&(b * b)),
            _ => self
                .as_f64()
                .partial_cmp(&other.as_f64())
                .unwrap_or(std::cmp::Ordering::Equal),
        }
    }

    pub fn max(self, other: SeminormValue) -> SeminormValue {
        if self.compare(&other) == std::cmp::Ordering::Less {
            other
        } else {
            self
        }
    }
}

/// |c| for a Gaussian rational, as either an exact rational or an exact
/// square. The square root of norm_sqr is rational iff norm_sqr is a
/// perfect square of rationals.
enum Modulus {
    Rational(BigRational),
    SqrtOf(BigRational),
}

fn modulus(c: &GaussianRational) -> Modulus {
    let n = c.norm_sqr();
    match rational_sqrt(&n) {
        Some(r) => Modulus::Rational(r),
        None => Modulus::SqrtOf(n),
    }
}

/// Exact square root of a nonnegative rational, if it is rational.
pub(crate) fn rational_sqrt(v: &BigRational) -> Option<BigRational> {
    if v.is_zero() {
        return Some(BigRational::zero());
    }
    let num = exact_int_sqrt(v.numer())?;
    let den = exact_int_sqrt(v.denom())?;
    Some(BigRational::new(num, den))
}

fn exact_int_sqrt(v: &BigInt) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let root = v.sqrt();
    if &(&root * &root) == v {
        Some(root)
    } else {
        None
    }
}

/// |P|!^R as Exact, Sqrt, or Approx depending on R.
fn factorial_power(total: u32, r: &BigRational) -> SeminormValue {
    let f = BigRational::from_integer(factorial(total));
    if r.is_integer() {
        let mut acc = BigRational::one();
        let mut k = r.to_integer();
        while k.is_positive() {
            acc *= &f;
            k -= 1;
        }
        return SeminormValue::Exact(acc);
    }
    let two_r = r * BigRational::from_integer(2.into());
    if two_r.is_integer() {
        // f^(m/2) = sqrt(f^m).
        let mut acc = BigRational::one();
        let mut k = two_r.to_integer();
        while k.is_positive() {
            acc *= &f;
            k -= 1;
        }
        return SeminormValue::Sqrt(acc);
    }
    let base = f.to_f64().unwrap_or(f64::INFINITY);
    SeminormValue::Approx(base.powf(r.to_f64().unwrap_or(f64::NAN)))
}

/// Product of a factorial power and a modulus, with the weight folded in.
fn term_value(fp: &SeminormValue, m: &Modulus, w: &BigRational) -> SeminormValue {
    match (fp, m) {
        (SeminormValue::Exact(f), Modulus::Rational(a)) => SeminormValue::Exact(f * a * w),
        (SeminormValue::Exact(f), Modulus::SqrtOf(s)) => {
            let sq = f * f * s * w * w;
            promote_sqrt(sq)
        }
        (SeminormValue::Sqrt(f2), Modulus::Rational(a)) => {
            let sq = f2 * a * a * w * w;
            promote_sqrt(sq)
        }
        (SeminormValue::Sqrt(f2), Modulus::SqrtOf(s)) => {
            let sq = f2 * s * w * w;
            promote_sqrt(sq)
        }
        (SeminormValue::Approx(x), m) => {
            let a = match m {
                Modulus::Rational(a) => a.to_f64().unwrap_or(f64::INFINITY),
                Modulus::SqrtOf(s) => s.to_f64().unwrap_or(f64::INFINITY).sqrt(),
            };
            SeminormValue::Approx(x * a * w.to_f64().unwrap_or(f64::INFINITY))
        }
    }
}

/// Collapse Sqrt(s) to Exact when s is a perfect square.
fn promote_sqrt(sq: BigRational) -> SeminormValue {
    match rational_sqrt(&sq) {
        Some(v) => SeminormValue::Exact(v),
        None => SeminormValue::Sqrt(sq),
    }
}

fn sum_values(values: Vec<SeminormValue>) -> SeminormValue {
    if values.is_empty() {
        return SeminormValue::zero();
    }
    // All exact: sum exactly. One lone value: keep its form. Otherwise fall
    // back to floats, since sums of distinct square roots leave the field.
    if values
        .iter()
        .all(|v| matches!(v, SeminormValue::Exact(_)))
    {
        let mut acc = BigRational::zero();
        for v in values {
            if let SeminormValue::Exact(x) = v {
                acc += x;
            }
        }
        return SeminormValue::Exact(acc);
    }
    let nonzero: Vec<&SeminormValue> = values.iter().filter(|v| !v.is_zero()).collect();
    if nonzero.len() == 1 {
        return nonzero[0].clone();
    }
    SeminormValue::Approx(values.iter().map(|v| v.as_f64()).sum())
}

fn constant_coefficient(c: &crate::scalar::Scalar) -> Result<GaussianRational, WeylError> {
    c.as_constant().ok_or(WeylError::NonConstantCoefficient)
}

/// p_R(a) = sum over terms of |P|!^R |a_P| w^P.
///
/// Coefficients must be parameter-free; substitute a value first if needed.
pub fn seminorm_pr(spec: &SeminormSpec, a: &SymElement) -> Result<SeminormValue, WeylError> {
    if spec.dim() != a.dim() {
        return Err(WeylError::DimensionMismatch {
            left: spec.dim(),
            right: a.dim(),
            context: "seminorm weights",
        });
    }
    let mut values = Vec::new();
    for (idx, c) in a.terms() {
        let c = constant_coefficient(c)?;
        let fp = factorial_power(idx.total(), spec.r());
        let m = modulus(&c);
        values.push(term_value(&fp, &m, &spec.weight_pow(idx)));
    }
    Ok(sum_values(values))
}

/// Max over total degrees n of the degree-n part of p_R.
pub fn seminorm_pr_sup(spec: &SeminormSpec, a: &SymElement) -> Result<SeminormValue, WeylError> {
    if spec.dim() != a.dim() {
        return Err(WeylError::DimensionMismatch {
            left: spec.dim(),
            right: a.dim(),
            context: "seminorm weights",
        });
    }
    let mut best = SeminormValue::zero();
    for (_, part) in a.components() {
        let v = seminorm_pr(spec, &part)?;
        best = best.max(v);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiindex::MultiIndex;
    use crate::scalar::Scalar;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    fn mono(dim: usize, idx: &[u32], c: Scalar) -> SymElement {
        SymElement::monomial(dim, MultiIndex(idx.to_vec()), c)
    }

    #[test]
    fn integer_r_stays_exact() {
        // a = 3 x^2 y, weights (1/2, 2), R = 1: 3!^1 * 3 * (1/4) * 2 = 9.
        let spec = SeminormSpec::new(vec![rat(1, 2), rat(2, 1)], rat(1, 1)).unwrap();
        let a = mono(2, &[2, 1], Scalar::from_int(3));
        let v = seminorm_pr(&spec, &a).unwrap();
        assert_eq!(v, SeminormValue::Exact(rat(9, 1)));
    }

    #[test]
    fn half_integer_r_gives_sqrt_or_exact() {
        let spec = SeminormSpec::uniform(1, rat(1, 1), rat(1, 2)).unwrap();
        // |P| = 3: sqrt(6) is irrational, so the value is Sqrt(6).
        let a = mono(1, &[3], Scalar::from_int(1));
        assert_eq!(
            seminorm_pr(&spec, &a).unwrap(),
            SeminormValue::Sqrt(rat(6, 1))
        );
        // |P| = 4: sqrt(24) irrational but coefficient 0 drops it; use
        // coefficient sqrt-friendly: 4!^(1/2) with |a| = sqrt(24) would be
        // exact, but simplest is |P| = 1: sqrt(1) = 1.
        let b = mono(1, &[1], Scalar::from_int(5));
        assert_eq!(
            seminorm_pr(&spec, &b).unwrap(),
            SeminormValue::Exact(rat(5, 1))
        );
    }

    #[test]
    fn complex_coefficient_modulus() {
        // |3 + 4i| = 5 exactly.
        let spec = SeminormSpec::uniform(1, rat(1, 1), rat(0, 1)).unwrap();
        let c = Scalar::from_gaussian(GaussianRational::new(rat(3, 1), rat(4, 1)));
        let a = mono(1, &[2], c);
        assert_eq!(
            seminorm_pr(&spec, &a).unwrap(),
            SeminormValue::Exact(rat(5, 1))
        );
        // |1 + i| = sqrt(2).
        let c2 = Scalar::from_gaussian(GaussianRational::new(rat(1, 1), rat(1, 1)));
        let b = mono(1, &[0], c2);
        assert_eq!(
            seminorm_pr(&spec, &b).unwrap(),
            SeminormValue::Sqrt(rat(2, 1))
        );
    }

    #[test]
    fn mixed_irrational_sum_falls_back_to_float() {
        let spec = SeminormSpec::uniform(1, rat(1, 1), rat(1, 2)).unwrap();
        // sqrt(2) + sqrt(6): no common exact form.
        let mut a = mono(1, &[2], Scalar::from_int(1));
        a.add_term(MultiIndex(vec![3]), Scalar::from_int(1));
        let v = seminorm_pr(&spec, &a).unwrap();
        match v {
            SeminormValue::Approx(x) => {
                let want = 2.0f64.sqrt() + 6.0f64.sqrt();
                assert!((x - want).abs() < 1e-12);
            }
            other => panic!("expected Approx, got {other:?}"),
        }
    }

    #[test]
    fn sup_variant_takes_degreewise_max() {
        let spec = SeminormSpec::uniform(1, rat(1, 1), rat(0, 1)).unwrap();
        // Degrees 0..2 with coefficients 1, 7, 2: sum is 10, sup is 7.
        let mut a = mono(1, &[0], Scalar::from_int(1));
        a.add_term(MultiIndex(vec![1]), Scalar::from_int(7));
        a.add_term(MultiIndex(vec![2]), Scalar::from_int(2));
        assert_eq!(
            seminorm_pr(&spec, &a).unwrap(),
            SeminormValue::Exact(rat(10, 1))
        );
        assert_eq!(
            seminorm_pr_sup(&spec, &a).unwrap(),
            SeminormValue::Exact(rat(7, 1))
        );
    }

    #[test]
    fn rejects_parameter_dependent_coefficients() {
        let spec = SeminormSpec::uniform(1, rat(1, 1), rat(0, 1)).unwrap();
        let a = mono(1, &[1], Scalar::param());
        assert!(matches!(
            seminorm_pr(&spec, &a),
            Err(WeylError::NonConstantCoefficient)
        ));
    }

    #[test]
    fn rejects_nonpositive_weights() {
        assert!(SeminormSpec::new(vec![rat(0, 1)], rat(1, 1)).is_err());
        assert!(SeminormSpec::new(vec![rat(-1, 2)], rat(1, 1)).is_err());
        assert!(SeminormSpec::new(vec![rat(1, 2)], rat(-1, 1)).is_err());
    }

    #[test]
    fn compare_mixed_forms() {
        use std::cmp::Ordering;
        let e = SeminormValue::Exact(rat(3, 2));
        let s = SeminormValue::Sqrt(rat(2, 1));
        // 3/2 = sqrt(9/4) > sqrt(2).
        assert_eq!(e.compare(&s), Ordering::Greater);
        assert_eq!(s.compare(&e), Ordering::Less);
    }
}
