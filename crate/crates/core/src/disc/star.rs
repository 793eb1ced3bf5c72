//! The reduced star product on the disc basis f[P|Q] and its classical
//! limits.
//!
//! The product of two basis elements is computed on their canonical lifts
//! (P, Q), (R, S) with equal totals per pair:
//!
//! ```text
//! f[P|Q] (star) f[R|S] = sum_{T <= min(P,S)} (-1)^{T_0} (2h)^{|T|} T!
//!     C(P,T) C(S,T) / (pi_{|P|} pi_{|S|})
//!     image(z^{P+R-T} zbar^{Q+S-T}),
//! ```
//!
//! where pi_m(h) = prod_{j<m} (1 + 2jh) and image is the
//! parameter-dependent restriction of the lifted result monomial: a
//! canonical target contributes pi_{|P|+|S|-|T|} f[P+R-T | Q+S-T], a
//! target with matched 0-th powers peels through the deformed quadric
//! relation first. The pi factors carried by the images are polynomial, so
//! every denominator divides pi_{|P|} pi_{|S|}: poles are confined to the
//! family -1/(2m) and never sit at 0.

use std::collections::HashMap;
use std::rc::Rc;

use num_rational::BigRational;

use crate::multiindex::MultiIndex;
use crate::scalar::{pole_set, GaussianRational, Scalar};

use super::cn::{wick_star, CnPolynomial};
use super::element::{DiscElement, DiscIndex};
use super::restrict::{classical_restriction, monomial_image, quantum_factor, ImageCache};
use super::DiscError;

/// Star-product engine with a cache of basis-pair products; reuse one
/// engine across products that share basis pairs (associativity sweeps,
/// pole reports).
pub struct ReducedStarEngine {
    n: usize,
    cache: HashMap<(DiscIndex, DiscIndex), Rc<DiscElement>>,
    images: ImageCache,
}

impl ReducedStarEngine {
    pub fn new(n: usize) -> Self {
        ReducedStarEngine {
            n,
            cache: HashMap::new(),
            images: ImageCache::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_n(&self, other: usize, context: &'static str) -> Result<(), DiscError> {
        if self.n != other {
            return Err(DiscError::DimensionMismatch {
                left: self.n,
                right: other,
                context,
            });
        }
        Ok(())
    }

    fn basis_star(&mut self, x: &DiscIndex, y: &DiscIndex) -> Rc<DiscElement> {
        if let Some(hit) = self.cache.get(&(x.clone(), y.clone())) {
            return Rc::clone(hit);
        }
        let (p, q) = x.canonical_lift();
        let (r, s) = y.canonical_lift();
        let denominator = &quantum_factor(p.total()) * &quantum_factor(s.total());
        let mut out = DiscElement::zero(self.n);
        for t in MultiIndex::min(&p, &s).sub_indices() {
            let tt = t.total();
            let mut c = BigRational::from_integer(
                t.factorial() * p.binom(&t) * s.binom(&t),
            );
            for _ in 0..tt {
                c *= BigRational::from_integer(2.into());
            }
            if t[0] % 2 == 1 {
                c = -c;
            }
            let weight = &Scalar::param_pow(GaussianRational::from_rational(c), tt as usize)
                / &denominator;
            let up_p = p.sub(&t).expect("t <= p").add(&r);
            let up_q = q.add(&s.sub(&t).expect("t <= s"));
            let image = monomial_image(&up_p, &up_q, &mut self.images);
            for (idx, k) in image.terms() {
                out.add_term(idx.clone(), &weight * k);
            }
        }
        let rc = Rc::new(out);
        self.cache.insert((x.clone(), y.clone()), Rc::clone(&rc));
        rc
    }

    pub fn star(&mut self, a: &DiscElement, b: &DiscElement) -> Result<DiscElement, DiscError> {
        self.check_n(a.n(), "reduced star, left factor")?;
        self.check_n(b.n(), "reduced star, right factor")?;
        let mut out = DiscElement::zero(self.n);
        for (ia, ca) in a.terms() {
            for (ib, cb) in b.terms() {
                let basis = self.basis_star(ia, ib);
                let c = ca * cb;
                for (idx, k) in basis.terms() {
                    out.add_term(idx.clone(), &c * k);
                }
            }
        }
        Ok(out)
    }
}

/// One-shot reduced star product.
pub fn reduced_star(a: &DiscElement, b: &DiscElement) -> Result<DiscElement, DiscError> {
    ReducedStarEngine::new(a.n()).star(a, b)
}

/// Pole locations of one basis-pair product.
#[derive(Clone, Debug)]
pub struct PoleReportRow {
    pub left: DiscIndex,
    pub right: DiscIndex,
    /// Exact pole positions over all coefficients, deduplicated, e.g.
    /// "-1/2".
    pub poles: Vec<String>,
}

/// Sweep all basis pairs with every index total at most max_degree, record
/// each coefficient's poles, and fail with ForeignPole if any pole escapes
/// the family {-1/(2m) : 1 <= m <= max_degree} or sits at 0.
pub fn pole_report(n: usize, max_degree: u32) -> Result<Vec<PoleReportRow>, DiscError> {
    let mut engine = ReducedStarEngine::new(n);
    let singles = MultiIndex::all_up_to(n, max_degree);
    let mut indices = Vec::new();
    for p in &singles {
        for q in &singles {
            indices.push(DiscIndex::new(p.clone(), q.clone()));
        }
    }
    let mut rows = Vec::new();
    for x in &indices {
        for y in &indices {
            let product = engine.basis_star(x, y);
            let mut poles = Vec::new();
            for (_, c) in product.terms() {
                let ps = pole_set(c);
                if !ps.is_confined(max_degree) {
                    let position = if ps.zero_multiplicity > 0 {
                        "0".to_string()
                    } else if ps.cofactor_degree > 0 {
                        format!("degree-{} non-family factor", ps.cofactor_degree)
                    } else {
                        ps.pole_strings()
                            .into_iter()
                            .last()
                            .unwrap_or_else(|| "unknown".to_string())
                    };
                    return Err(DiscError::ForeignPole {
                        pole: position,
                        left: x.to_string(),
                        right: y.to_string(),
                    });
                }
                for s in ps.pole_strings() {
                    if !poles.contains(&s) {
                        poles.push(s);
                    }
                }
            }
            rows.push(PoleReportRow {
                left: x.clone(),
                right: y.clone(),
                poles,
            });
        }
    }
    Ok(rows)
}

/// Classical limits of the reduced product of a pair: the product at
/// parameter 0 and the bracket i/h (a b - b a) at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiclassicalLimit {
    pub product: DiscElement,
    pub bracket: DiscElement,
}

fn eval_at_zero(e: &DiscElement) -> Result<DiscElement, DiscError> {
    e.evaluate_param(&GaussianRational::zero()).map_err(|err| match err {
        DiscError::PoleAtPoint => DiscError::UnexpectedPoleAtZero,
        other => other,
    })
}

/// Divide every coefficient by the parameter and evaluate at 0; fails with
/// UnexpectedPoleAtZero when a coefficient does not vanish at 0.
fn first_order_at_zero(e: &DiscElement) -> Result<DiscElement, DiscError> {
    let mut out = DiscElement::zero(e.n());
    for (idx, c) in e.terms() {
        let divided = c / &Scalar::param();
        let value = divided
            .eval(&GaussianRational::zero())
            .map_err(|_| DiscError::UnexpectedPoleAtZero)?;
        out.add_term(idx.clone(), Scalar::from_gaussian(value));
    }
    Ok(out)
}

/// Compute both semiclassical limits of a pair.
pub fn semiclassical_limit(
    a: &DiscElement,
    b: &DiscElement,
) -> Result<SemiclassicalLimit, DiscError> {
    let mut engine = ReducedStarEngine::new(a.n());
    let ab = engine.star(a, b)?;
    let ba = engine.star(b, a)?;
    let product = eval_at_zero(&ab)?;
    let commutator = ab.sub(&ba);
    let bracket = first_order_at_zero(&commutator)?
        .scale(&Scalar::from_gaussian(GaussianRational::i()));
    Ok(SemiclassicalLimit { product, bracket })
}

/// Independent classical product: restrict the pointwise product of the
/// canonical lifts.
pub fn classical_product(a: &DiscElement, b: &DiscElement) -> Result<DiscElement, DiscError> {
    classical_restriction(&a.lift().mul(&b.lift())?)
}

/// Independent bracket: restrict i times the first parameter order of the
/// normal-ordered commutator of the canonical lifts. Meaningful for
/// parameter-free inputs.
pub fn reduced_poisson_bracket(
    a: &DiscElement,
    b: &DiscElement,
) -> Result<DiscElement, DiscError> {
    let la = a.lift();
    let lb = b.lift();
    let comm = wick_star(&la, &lb)?.sub(&wick_star(&lb, &la)?);
    let mut first_order = CnPolynomial::zero(comm.n());
    for ((p, q), c) in comm.terms() {
        let divided = c / &Scalar::param();
        let value = divided
            .eval(&GaussianRational::zero())
            .map_err(|_| DiscError::UnexpectedPoleAtZero)?;
        let scaled = &GaussianRational::i() * &value;
        first_order.add_term(p.clone(), q.clone(), Scalar::from_gaussian(scaled));
    }
    classical_restriction(&first_order)
}
