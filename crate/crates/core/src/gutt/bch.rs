//! Baker-Campbell-Hausdorff data in the free associative algebra on two
//! letters, and its comparison against the star-product exponentials.
//!
//! Words in x and y are packed into a (length, bits) pair; the series
//!
//! ```text
//! log(exp x exp y) = sum_m (-1)^{m+1} Z^m / m,   Z = exp x exp y - 1,
//! ```
//!
//! is computed degree by degree with exact rational coefficients up to a
//! hard cap of 12 letters. Per-degree absolute coefficient sums are compared
//! against the 2/n bound; the right-nested bracketing map recovers the Lie
//! form degree by degree (Dynkin), which can be evaluated on concrete
//! vectors in any Lie structure. For nilpotent structures the full series is
//! finite, which allows an exact identity between a star product of
//! exponentials and the exponential of the combined series.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::gutt::lie::{GuttError, LieStructure};
use crate::gutt::pbw::PbwEngine;
use crate::multiindex::factorial;
use crate::scalar::{GaussianRational, Scalar};
use crate::weyl::{sym_mul, SymElement};

/// Hard cap on word length: bits are stored in a u16 and coefficient
/// growth beyond this is of no diagnostic interest here.
pub const MAX_ORDER: u32 = 12;

/// A word in two letters; letter t of the word (0-based from the left) is
/// bit t of `bits`, with 0 = x and 1 = y.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    len: u8,
    bits: u16,
}

impl Word {
    pub fn empty() -> Self {
        Word { len: 0, bits: 0 }
    }

    pub fn letter(l: u8) -> Self {
        debug_assert!(l < 2);
        Word {
            len: 1,
            bits: l as u16,
        }
    }

    /// x^a y^b.
    pub fn block(a: u32, b: u32) -> Self {
        debug_assert!(a + b <= 16);
        Word {
            len: (a + b) as u8,
            bits: ((1u32 << b) - 1).wrapping_shl(a) as u16,
        }
    }

    pub fn len(&self) -> u32 {
        self.len as u32
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn letter_at(&self, t: u32) -> u8 {
        debug_assert!(t < self.len());
        ((self.bits >> t) & 1) as u8
    }

    pub fn concat(&self, other: &Word) -> Word {
        debug_assert!(self.len() + other.len() <= 16);
        Word {
            len: self.len + other.len,
            bits: self.bits | (other.bits << self.len),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for t in 0..self.len() {
            write!(f, "{}", if self.letter_at(t) == 0 { 'x' } else { 'y' })?;
        }
        Ok(())
    }
}

/// An element of the free associative algebra on x and y, truncated beyond
/// the given total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAlgElement {
    cap: u32,
    terms: BTreeMap<Word, BigRational>,
}

impl FreeAlgElement {
    pub fn zero(cap: u32) -> Self {
        FreeAlgElement {
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(cap: u32) -> Self {
        let mut e = Self::zero(cap);
        e.add_term(Word::empty(), BigRational::one());
        e
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() || w.len() > self.cap {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &FreeAlgElement) -> FreeAlgElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FreeAlgElement) -> FreeAlgElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, -c);
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> FreeAlgElement {
        let mut out = FreeAlgElement::zero(self.cap);
        if c.is_zero() {
            return out;
        }
        for (w, v) in &self.terms {
            out.terms.insert(*w, v * c);
        }
        out
    }

    pub fn mul(&self, other: &FreeAlgElement) -> FreeAlgElement {
        let mut out = FreeAlgElement::zero(self.cap.min(other.cap));
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                if w1.len() + w2.len() > out.cap {
                    continue;
                }
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// The part of word length exactly n.
    pub fn component(&self, n: u32) -> FreeAlgElement {
        let mut out = FreeAlgElement::zero(self.cap);
        for (w, c) in &self.terms {
            if w.len() == n {
                out.terms.insert(*w, c.clone());
            }
        }
        out
    }
}

/// log(exp x exp y) in the free algebra, all degrees up to n_max.
pub fn bch_truncated(n_max: u32) -> Result<FreeAlgElement, GuttError> {
    if n_max < 1 || n_max > MAX_ORDER {
        return Err(GuttError::OrderOutOfRange {
            got: n_max,
            max: MAX_ORDER,
        });
    }
    // Z = exp(x) exp(y) - 1 = sum over 1 <= a+b <= n_max of x^a y^b / (a! b!).
    let mut z = FreeAlgElement::zero(n_max);
    for a in 0..=n_max {
        for b in 0..=(n_max - a) {
            if a + b == 0 {
                continue;
            }
            let den = &factorial(a) * &factorial(b);
            z.add_term(Word::block(a, b), BigRational::new(1.into(), den));
        }
    }
    // log(1 + Z) = sum_m (-1)^{m+1} Z^m / m; Z has no constant term, so the
    // series stops contributing past m = n_max.
    let mut acc = FreeAlgElement::zero(n_max);
    let mut z_pow = z.clone();
    for m in 1..=n_max {
        let sign = if m % 2 == 1 { 1 } else { -1 };
        let coeff = BigRational::new(sign.into(), m.into());
        acc = acc.add(&z_pow.scale(&coeff));
        if m < n_max {
            z_pow = z_pow.mul(&z);
        }
    }
    Ok(acc)
}

/// Per-degree absolute coefficient sums of the series against the 2/n bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldbergRow {
    pub n: u32,
    /// sum over |w| = n of |coefficient of w|.
    pub sum_abs: BigRational,
    /// The bound 2/n.
    pub bound: BigRational,
    /// Whether the bound is attained exactly.
    pub attained: bool,
}

pub fn goldberg_rows(n_max: u32) -> Result<Vec<GoldbergRow>, GuttError> {
    let series = bch_truncated(n_max)?;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let mut sum = BigRational::zero();
        for (w, c) in series.terms() {
            if w.len() == n {
                sum += c.abs();
            }
        }
        let bound = BigRational::new(2.into(), n.into());
        rows.push(GoldbergRow {
            n,
            attained: sum == bound,
            sum_abs: sum,
            bound,
        });
    }
    Ok(rows)
}

/// Right-nested bracketing of a word: B(l) = l, B(l w) = [l, B(w)] expanded
/// in the free algebra.
pub fn right_nested_bracket(w: &Word, cap: u32) -> FreeAlgElement {
    assert!(!w.is_empty(), "bracketing needs a nonempty word");
    let last = Word::letter(w.letter_at(w.len() - 1));
    let mut acc = {
        let mut e = FreeAlgElement::zero(cap);
        e.add_term(last, BigRational::one());
        e
    };
    for t in (0..w.len() - 1).rev() {
        let l = {
            let mut e = FreeAlgElement::zero(cap);
            e.add_term(Word::letter(w.letter_at(t)), BigRational::one());
            e
        };
        acc = l.mul(&acc).sub(&acc.mul(&l));
    }
    acc
}

/// The degree-n Lie projection: sum over |w| = n of c_w B(w) / n. Applied to
/// the degree-n component of the series it reproduces the component.
pub fn dynkin_projection(series: &FreeAlgElement, n: u32) -> FreeAlgElement {
    let mut out = FreeAlgElement::zero(series.cap());
    for (w, c) in series.terms() {
        if w.len() != n {
            continue;
        }
        let b = right_nested_bracket(w, series.cap());
        out = out.add(&b.scale(&(c / BigRational::from_integer(n.into()))));
    }
    out
}

/// Right-nested bracketing of a word evaluated on concrete vectors.
fn bracket_word_vec(
    lie: &LieStructure,
    w: &Word,
    x: &[GaussianRational],
    y: &[GaussianRational],
) -> Vec<GaussianRational> {
    let pick = |l: u8| if l == 0 { x.to_vec() } else { y.to_vec() };
    let mut acc = pick(w.letter_at(w.len() - 1));
    for t in (0..w.len() - 1).rev() {
        acc = lie.bracket_vec(&pick(w.letter_at(t)), &acc);
    }
    acc
}

/// The degree-n term of the combined exponent evaluated on vectors:
/// sum over |w| = n of (c_w / n) B(w)(x, y).
pub fn bch_component_vec(
    lie: &LieStructure,
    series: &FreeAlgElement,
    n: u32,
    x: &[GaussianRational],
    y: &[GaussianRational],
) -> Vec<GaussianRational> {
    let mut acc = vec![GaussianRational::zero(); lie.dim()];
    let inv_n = GaussianRational::from_rational(BigRational::new(1.into(), n.into()));
    for (w, c) in series.terms() {
        if w.len() != n {
            continue;
        }
        let b = bracket_word_vec(lie, w, x, y);
        let weight = &GaussianRational::from_rational(c.clone()) * &inv_n;
        for (slot, v) in acc.iter_mut().zip(b) {
            *slot = &*slot + &(&v * &weight);
        }
    }
    acc
}

/// Drop every (monomial degree m, parameter order j) component with
/// m + j > n. That weight is additive under the star product, which makes
/// this truncation compatible with partial exponential sums.
pub fn truncate_by_total_weight(e: &SymElement, n: u32) -> Result<SymElement, GuttError> {
    let mut out = SymElement::zero(e.dim());
    for (p, c) in e.terms() {
        if !c.is_polynomial() {
            return Err(GuttError::Sym(
                crate::weyl::WeylError::NotPolynomialInParameter,
            ));
        }
        let m = p.total();
        if m > n {
            continue;
        }
        let mut kept = Vec::new();
        for (j, v) in c.numer().coeffs().iter().enumerate() {
            if m + (j as u32) <= n {
                kept.push(v.clone());
            }
        }
        out.add_term(
            p.clone(),
            Scalar::from_poly(crate::scalar::Poly::from_coeffs(kept)),
        );
    }
    Ok(out)
}

/// Outcome of comparing star-exponentials against the exponential of the
/// combined series.
#[derive(Clone, Debug)]
pub struct ExpBchReport {
    /// Components (m, j) with m + j <= truncation were compared.
    pub truncation: u32,
    /// Degrees of the series that enter the combined exponent.
    pub bch_orders_used: u32,
    pub matches: bool,
    /// Left minus right on the compared components; zero iff matches.
    pub difference: SymElement,
}

/// Exact check that exp(xi) (star) exp(eta) agrees with exp(W) where
/// W = xi + eta + sum_{n >= 2} z^{n-1} (degree-n series term)(xi, eta).
///
/// Requires a nilpotent structure so that W is a finite sum; both sides are
/// compared on all components of total weight (degree + parameter order) up
/// to the truncation, where the partial exponential sums are complete.
pub fn exp_gutt_bch_check(
    engine: &mut PbwEngine,
    xi: &[GaussianRational],
    eta: &[GaussianRational],
    truncation: u32,
) -> Result<ExpBchReport, GuttError> {
    let class = engine
        .lie()
        .nilpotency_class()
        .ok_or(GuttError::NotNilpotent)? as u32;
    if class > MAX_ORDER {
        return Err(GuttError::OrderOutOfRange {
            got: class,
            max: MAX_ORDER,
        });
    }
    if truncation < 1 || truncation > MAX_ORDER {
        return Err(GuttError::OrderOutOfRange {
            got: truncation,
            max: MAX_ORDER,
        });
    }
    let dim = engine.dim();
    assert_eq!(xi.len(), dim, "xi has wrong dimension");
    assert_eq!(eta.len(), dim, "eta has wrong dimension");
    let n_max = truncation;

    // Left side: (sum_k xi^k / k!) (star) (sum_l eta^l / l!).
    let exp_of = |v: &[GaussianRational]| -> Result<SymElement, GuttError> {
        let lin = SymElement::from_vector(v);
        let mut acc = SymElement::one(dim);
        let mut power = SymElement::one(dim);
        for k in 1..=n_max {
            power = sym_mul(&power, &lin)?;
            let inv = Scalar::from_gaussian(GaussianRational::from_rational(BigRational::new(
                1.into(),
                factorial(k),
            )));
            acc = acc.add(&power.scale(&inv));
        }
        Ok(acc)
    };
    let lhs_full = engine.gutt_star(&exp_of(xi)?, &exp_of(eta)?)?;
    let lhs = truncate_by_total_weight(&lhs_full, n_max)?;

    // Combined exponent W: degree 1 gives xi + eta; each higher degree n
    // contributes its vector with a z^{n-1} weight. Degrees above the
    // nilpotency class vanish identically.
    let series_cap = class.min(MAX_ORDER);
    let series = bch_truncated(series_cap.max(1))?;
    let mut w = SymElement::zero(dim);
    let sum: Vec<GaussianRational> = xi
        .iter()
        .zip(eta)
        .map(|(a, b)| a + b)
        .collect();
    w = w.add(&SymElement::from_vector(&sum));
    for n in 2..=series_cap {
        let v = bch_component_vec(engine.lie(), &series, n, xi, eta);
        if v.iter().all(|c| c.is_zero()) {
            continue;
        }
        let lin = SymElement::from_vector(&v);
        let weight = Scalar::param_pow(GaussianRational::one(), (n - 1) as usize);
        w = w.add(&lin.scale(&weight));
    }

    // Right side: sum_k W^{star k} / k!, truncated by total weight at each
    // step. Every component of W has weight >= 1 and the weight is additive,
    // so powers past the truncation cannot contribute.
    let mut rhs = SymElement::one(dim);
    let mut power = SymElement::one(dim);
    for k in 1..=n_max {
        power = engine.gutt_star(&power, &w)?;
        power = truncate_by_total_weight(&power, n_max)?;
        let inv = Scalar::from_gaussian(GaussianRational::from_rational(BigRational::new(
            1.into(),
            factorial(k),
        )));
        rhs = rhs.add(&power.scale(&inv));
    }
    let rhs = truncate_by_total_weight(&rhs, n_max)?;

    let difference = lhs.sub(&rhs);
    Ok(ExpBchReport {
        truncation: n_max,
        bch_orders_used: series_cap,
        matches: difference.is_zero(),
        difference,
    })
}
