//! Restriction of phase-invariant polynomials on C^{n+1} to the quadric
//! -|z^0|^2 + sum_k |z^k|^2 = 1, expressed on the reduced basis f[P|Q].
//!
//! Two reductions coexist. The classical one drops a function to the
//! quadric pointwise: z^0 zbar^0 = sum_k z^k zbar^k - 1 there, so a
//! monomial sheds its matched 0-th powers through
//!
//! ```text
//! (z^0 zbar^0)^m = sum_{|T| <= m} (-1)^{m-|T|} C(m,|T|) (|T|!/T!)
//!                  z'^T zbar'^T,
//! ```
//!
//! the alternating signs coming from the -1 on the right of the quadric
//! relation.
//!
//! The parameter-dependent reduction works modulo the left star-ideal
//! generated by g - 1 instead (g star-commutes with every invariant
//! element, so the quotient of the invariant subalgebra is an algebra).
//! Commuting the generator across one holomorphic letter costs 2h, so one
//! matched 0-th pair peels off as
//!
//! ```text
//! d_{A,B} = sum_k d_{A-e0+ek, B-e0+ek}
//!           - (1 - 2h (|A| - 1)) d_{A-e0, B-e0}   (mod the ideal),
//! ```
//!
//! recovering the classical relation at h = 0. A monomial with no matched
//! 0-th pair is its own canonical lift and maps to pi_M(h) f[P'|Q'] with
//! M its total and pi_M(h) = prod_{j<M} (1 + 2jh); this scaling makes the
//! reduction intertwine the normal-ordered product upstairs with the
//! reduced product downstairs, which is what morphism_check verifies.

use std::collections::HashMap;
use std::rc::Rc;

use num_rational::BigRational;

use crate::multiindex::MultiIndex;
use crate::scalar::{GaussianRational, Scalar};

use super::cn::CnPolynomial;
use super::element::{DiscElement, DiscIndex};
use super::DiscError;

/// Expansion of the restricted monomial z^A zbar^B (totals equal, length
/// n + 1) over the reduced basis, with exact rational coefficients.
pub(crate) fn expand_monomial(a: &MultiIndex, b: &MultiIndex) -> Vec<(DiscIndex, BigRational)> {
    debug_assert_eq!(a.total(), b.total(), "expansion needs equal totals");
    let (a0, a_rest) = a.split_head();
    let (b0, b_rest) = b.split_head();
    let m = a0.min(b0);
    let mut out = Vec::new();
    for t in MultiIndex::all_up_to(a_rest.dim(), m) {
        let tt = t.total();
        let mut c = BigRational::from_integer(
            crate::multiindex::binomial(m, tt) * crate::multiindex::factorial(tt),
        );
        c /= BigRational::from_integer(t.factorial());
        if (m - tt) % 2 == 1 {
            c = -c;
        }
        out.push((DiscIndex::new(a_rest.add(&t), b_rest.add(&t)), c));
    }
    out
}

/// Restriction at parameter zero: drop to the quadric and rewrite on the
/// reduced basis. Requires a phase-invariant input.
pub fn classical_restriction(p: &CnPolynomial) -> Result<DiscElement, DiscError> {
    if !p.is_invariant() {
        return Err(DiscError::NotInvariant);
    }
    let mut out = DiscElement::zero(p.n());
    for ((a, b), coeff) in p.terms() {
        for (idx, c) in expand_monomial(a, b) {
            out.add_term(
                idx,
                coeff * &Scalar::from_gaussian(GaussianRational::from_rational(c)),
            );
        }
    }
    Ok(out)
}

/// pi_m(h) = prod_{j=0}^{m-1} (1 + 2 j h), the degree-m scaling of the
/// parameter-dependent restriction. Equals (2h)^m (1/(2h))_m as rational
/// functions; the product form keeps it polynomial.
pub fn quantum_factor(m: u32) -> Scalar {
    let mut acc = Scalar::one();
    for j in 1..m {
        let lin = &Scalar::one() + &Scalar::param_pow(GaussianRational::from_int(2 * j as i64), 1);
        acc = &acc * &lin;
    }
    acc
}

/// Memo for the parameter-dependent images of monomials; shared between
/// the restriction map and the star-product engine.
pub(crate) type ImageCache = HashMap<(MultiIndex, MultiIndex), Rc<DiscElement>>;

/// Image of one monomial z^A zbar^B (equal totals) under the
/// parameter-dependent restriction: canonical monomials scale by
/// pi_{|A|}(h), matched 0-th pairs peel through the deformed relation.
pub(crate) fn monomial_image(
    a: &MultiIndex,
    b: &MultiIndex,
    cache: &mut ImageCache,
) -> Rc<DiscElement> {
    debug_assert_eq!(a.total(), b.total(), "reduction needs equal totals");
    if let Some(hit) = cache.get(&(a.clone(), b.clone())) {
        return Rc::clone(hit);
    }
    let n = a.dim() - 1;
    let (a0, a_rest) = a.split_head();
    let (b0, b_rest) = b.split_head();
    let out = if a0 == 0 || b0 == 0 {
        DiscElement::monomial(
            DiscIndex::new(a_rest, b_rest),
            quantum_factor(a.total()),
        )
    } else {
        let ap = a.with_bumped(0, -1);
        let bp = b.with_bumped(0, -1);
        let mut acc = DiscElement::zero(n);
        for k in 1..=n {
            let img = monomial_image(&ap.with_bumped(k, 1), &bp.with_bumped(k, 1), cache);
            acc = acc.add(&img);
        }
        let drop_factor = &Scalar::one()
            - &Scalar::param_pow(
                GaussianRational::from_int(2 * (a.total() as i64 - 1)),
                1,
            );
        let img = monomial_image(&ap, &bp, cache);
        acc.sub(&img.scale(&drop_factor))
    };
    let rc = Rc::new(out);
    cache.insert((a.clone(), b.clone()), Rc::clone(&rc));
    rc
}

/// Parameter-dependent restriction. Requires a phase-invariant input.
pub fn quantum_restriction(p: &CnPolynomial) -> Result<DiscElement, DiscError> {
    if !p.is_invariant() {
        return Err(DiscError::NotInvariant);
    }
    let mut cache = ImageCache::new();
    let mut out = DiscElement::zero(p.n());
    for ((a, b), coeff) in p.terms() {
        let img = monomial_image(a, b, &mut cache);
        for (idx, c) in img.terms() {
            out.add_term(idx.clone(), coeff * c);
        }
    }
    Ok(out)
}

/// True when the parameter-dependent restriction kills the element, i.e.
/// it lies in the star-ideal cut out by g - 1.
pub fn kernel_membership(p: &CnPolynomial) -> Result<bool, DiscError> {
    Ok(quantum_restriction(p)?.is_zero())
}

/// Report of the intertwining check on one pair of invariant polynomials.
#[derive(Clone, Debug)]
pub struct MorphismReport {
    /// Restriction of the upstairs product.
    pub restricted_product: DiscElement,
    /// Reduced product of the restrictions.
    pub product_of_restrictions: DiscElement,
    pub matches: bool,
}

/// Check that restriction turns the normal-ordered product upstairs into
/// the reduced product downstairs, exactly as rational functions.
pub fn morphism_check(a: &CnPolynomial, b: &CnPolynomial) -> Result<MorphismReport, DiscError> {
    let upstairs = super::cn::wick_star(a, b)?;
    let restricted_product = quantum_restriction(&upstairs)?;
    let ra = quantum_restriction(a)?;
    let rb = quantum_restriction(b)?;
    let product_of_restrictions = super::star::reduced_star(&ra, &rb)?;
    let matches = restricted_product == product_of_restrictions;
    Ok(MorphismReport {
        restricted_product,
        product_of_restrictions,
        matches,
    })
}
