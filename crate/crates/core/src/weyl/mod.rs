//! Star products on symmetric algebras over a constant bilinear form.
//!
//! Elements of Sym(V) for V = span(e_0..e_{d-1}) are kept as sparse maps from
//! monomial exponents to scalars. The bidifferential building block is the
//! substitution operator on pair tensors
//!
//! ```text
//! P_Lambda(e^P (x) e^Q) = sum_{i,j} P_i Q_j Lambda_{ij} e^{P-d_i} (x) e^{Q-d_j},
//! ```
//!
//! with P_Lambda(v (x) 1) = P_Lambda(1 (x) w) = 0. The star product is
//! mu o exp(z P_Lambda) applied to a (x) b, which terminates on polynomials.
//! The induced constant Poisson bracket is mu o (P_Lambda - tau P_Lambda tau).

pub mod seminorm;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::multiindex::{factorial, MultiIndex};
use crate::scalar::{GaussianRational, Scalar};

pub use seminorm::{seminorm_pr, seminorm_pr_sup, SeminormSpec, SeminormValue};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("dimension mismatch in {context}: {left} vs {right}")]
    DimensionMismatch {
        left: usize,
        right: usize,
        context: &'static str,
    },
    #[error("coefficient is not polynomial in the deformation parameter")]
    NotPolynomialInParameter,
    #[error("operation needs parameter-free coefficients")]
    NonConstantCoefficient,
    #[error("seminorm weights must be positive, one per dimension")]
    BadSeminormSpec,
}

/// An element of Sym(V), sparse in the monomial basis e^P.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymElement {
    dim: usize,
    terms: BTreeMap<MultiIndex, Scalar>,
}

impl SymElement {
    pub fn zero(dim: usize) -> Self {
        SymElement {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(dim, MultiIndex::zero(dim), Scalar::one())
    }

    pub fn monomial(dim: usize, idx: MultiIndex, coeff: Scalar) -> Self {
        assert_eq!(idx.dim(), dim, "monomial index has wrong dimension");
        let mut e = Self::zero(dim);
        e.add_term(idx, coeff);
        e
    }

    /// The generator e_i.
    pub fn generator(dim: usize, i: usize) -> Self {
        Self::monomial(dim, MultiIndex::unit(dim, i), Scalar::one())
    }

    /// A degree-one element with the given coordinates.
    pub fn from_vector(coords: &[GaussianRational]) -> Self {
        let dim = coords.len();
        let mut e = Self::zero(dim);
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                e.add_term(MultiIndex::unit(dim, i), Scalar::from_gaussian(c.clone()));
            }
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, idx: &MultiIndex) -> Scalar {
        self.terms.get(idx).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Accumulate coeff onto e^idx, dropping the term if it cancels to zero.
    pub fn add_term(&mut self, idx: MultiIndex, coeff: Scalar) {
        debug_assert_eq!(idx.dim(), self.dim);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(idx);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &SymElement) -> SymElement {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymElement) -> SymElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymElement {
        let mut out = SymElement::zero(self.dim);
        for (idx, c) in &self.terms {
            out.terms.insert(idx.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SymElement {
        if c.is_zero() {
            return SymElement::zero(self.dim);
        }
        let mut out = SymElement::zero(self.dim);
        for (idx, a) in &self.terms {
            let prod = a * c;
            if !prod.is_zero() {
                out.terms.insert(idx.clone(), prod);
            }
        }
        out
    }

    /// Largest |P| over the support, None for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|p| p.total()).max()
    }

    /// The part of fixed total degree n.
    pub fn homogeneous_component(&self, n: u32) -> SymElement {
        let mut out = SymElement::zero(self.dim);
        for (idx, c) in &self.terms {
            if idx.total() == n {
                out.terms.insert(idx.clone(), c.clone());
            }
        }
        out
    }

    /// Split into homogeneous parts, keyed by degree; zero parts are absent.
    pub fn components(&self) -> BTreeMap<u32, SymElement> {
        let mut map: BTreeMap<u32, SymElement> = BTreeMap::new();
        for (idx, c) in &self.terms {
            map.entry(idx.total())
                .or_insert_with(|| SymElement::zero(self.dim))
                .terms
                .insert(idx.clone(), c.clone());
        }
        map
    }

    /// Substitute an exact value for the deformation parameter.
    pub fn evaluate_param(
        &self,
        value: &GaussianRational,
    ) -> Result<SymElement, crate::scalar::ArithmeticError> {
        let mut out = SymElement::zero(self.dim);
        for (idx, c) in &self.terms {
            let v = c.eval(value)?;
            out.add_term(idx.clone(), Scalar::from_gaussian(v));
        }
        Ok(out)
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> SymElement {
        let mut out = SymElement::zero(self.dim);
        for (idx, c) in &self.terms {
            out.add_term(idx.clone(), f(c));
        }
        out
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.display_with("z");
            let simple = !cs.contains('+') && !cs.contains('/');
            if idx.is_zero() {
                write!(f, "{cs}")?;
                continue;
            }
            if c.is_one() {
                // fall through to the monomial alone
            } else if simple {
                write!(f, "{cs}*")?;
            } else {
                write!(f, "({cs})*")?;
            }
            let mut wrote = false;
            for (i, &p) in idx.0.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                wrote = true;
                if p == 1 {
                    write!(f, "x{i}")?;
                } else {
                    write!(f, "x{i}^{p}")?;
                }
            }
        }
        Ok(())
    }
}

/// Commutative product on Sym(V).
pub fn sym_mul(a: &SymElement, b: &SymElement) -> Result<SymElement, WeylError> {
    check_dims(a.dim, b.dim, "sym_mul")?;
    let mut out = SymElement::zero(a.dim);
    for (p, ca) in &a.terms {
        for (q, cb) in &b.terms {
            out.add_term(p.add(q), ca * cb);
        }
    }
    Ok(out)
}

/// k-fold commutative power.
pub fn sym_pow(a: &SymElement, k: u32) -> Result<SymElement, WeylError> {
    let mut acc = SymElement::one(a.dim());
    for _ in 0..k {
        acc = sym_mul(&acc, a)?;
    }
    Ok(acc)
}

fn check_dims(left: usize, right: usize, context: &'static str) -> Result<(), WeylError> {
    if left != right {
        return Err(WeylError::DimensionMismatch {
            left,
            right,
            context,
        });
    }
    Ok(())
}

/// Constant bilinear form Lambda on V, entries Lambda(e_i, e_j) row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    dim: usize,
    entries: Vec<Scalar>,
}

impl BilinearForm {
    pub fn new(dim: usize, entries: Vec<Scalar>) -> Result<Self, WeylError> {
        if entries.len() != dim * dim {
            return Err(WeylError::DimensionMismatch {
                left: entries.len(),
                right: dim * dim,
                context: "bilinear form entries",
            });
        }
        Ok(BilinearForm { dim, entries })
    }

    pub fn zero(dim: usize) -> Self {
        BilinearForm {
            dim,
            entries: vec![Scalar::zero(); dim * dim],
        }
    }

    /// The standard symplectic form on dim 2: Lambda(e_0,e_1) = 1 = -Lambda(e_1,e_0).
    pub fn symplectic_2d() -> Self {
        let mut f = Self::zero(2);
        f.set(0, 1, Scalar::from_int(1));
        f.set(1, 0, Scalar::from_int(-1));
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, WeylError> {
        let dim = rows.len();
        for r in &rows {
            check_dims(r.len(), dim, "bilinear form row")?;
        }
        Ok(BilinearForm {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }
}

impl Serialize for BilinearForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BilinearForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<Scalar>>::deserialize(d)?;
        BilinearForm::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// An element of Sym(V) (x) Sym(V), the domain of the substitution operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTensor {
    dim: usize,
    terms: BTreeMap<(MultiIndex, MultiIndex), Scalar>,
}

impl PairTensor {
    pub fn from_pair(a: &SymElement, b: &SymElement) -> Result<Self, WeylError> {
        check_dims(a.dim, b.dim, "pair tensor")?;
        let mut terms = BTreeMap::new();
        for (p, ca) in &a.terms {
            for (q, cb) in &b.terms {
                let c = ca * cb;
                if !c.is_zero() {
                    terms.insert((p.clone(), q.clone()), c);
                }
            }
        }
        Ok(PairTensor { dim: a.dim, terms })
    }

    pub fn monomial_pair(dim: usize, p: MultiIndex, q: MultiIndex, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((p, q), c);
        }
        PairTensor { dim, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(MultiIndex, MultiIndex), &Scalar)> {
        self.terms.iter()
    }

    fn add_term(&mut self, key: (MultiIndex, MultiIndex), coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Multiply the two legs together.
    pub fn mu(&self) -> SymElement {
        let mut out = SymElement::zero(self.dim);
        for ((p, q), c) in &self.terms {
            out.add_term(p.add(q), c.clone());
        }
        out
    }
}

/// One application of the substitution operator P_Lambda.
pub fn p_lambda(lambda: &BilinearForm, t: &PairTensor) -> Result<PairTensor, WeylError> {
    check_dims(lambda.dim, t.dim, "p_lambda")?;
    let dim = t.dim;
    let mut out = PairTensor {
        dim,
        terms: BTreeMap::new(),
    };
    for ((p, q), c) in &t.terms {
        for i in 0..dim {
            if p[i] == 0 {
                continue;
            }
            for j in 0..dim {
                if q[j] == 0 {
                    continue;
                }
                let lam = lambda.get(i, j);
                if lam.is_zero() {
                    continue;
                }
                let count = Scalar::from_int((p[i] as i64) * (q[j] as i64));
                let coeff = &(c * lam) * &count;
                out.add_term((p.with_bumped(i, -1), q.with_bumped(j, -1)), coeff);
            }
        }
    }
    Ok(out)
}

/// Star product mu o exp(z P_Lambda) on polynomial arguments.
///
/// The exponential series terminates because each application of P_Lambda
/// lowers both leg degrees by one.
pub fn weyl_star(
    lambda: &BilinearForm,
    a: &SymElement,
    b: &SymElement,
) -> Result<SymElement, WeylError> {
    check_dims(a.dim, b.dim, "weyl_star")?;
    check_dims(lambda.dim, a.dim, "weyl_star form")?;
    let mut t = PairTensor::from_pair(a, b)?;
    let mut acc = SymElement::zero(a.dim);
    let mut k: u32 = 0;
    loop {
        if t.is_zero() {
            break;
        }
        let inv_kfact = GaussianRational::new(
            BigRational::new(1.into(), factorial(k)),
            BigRational::from_integer(0.into()),
        );
        let weight = Scalar::param_pow(inv_kfact, k as usize);
        acc = acc.add(&t.mu().scale(&weight));
        t = p_lambda(lambda, &t)?;
        k += 1;
    }
    acc
        .terms
        .retain(|_, c| !c.is_zero());
    Ok(acc)
}

/// Constant Poisson bracket mu o (P_Lambda - tau P_Lambda tau).
pub fn poisson_bracket_const(
    lambda: &BilinearForm,
    a: &SymElement,
    b: &SymElement,
) -> Result<SymElement, WeylError> {
    check_dims(a.dim, b.dim, "poisson_bracket_const")?;
    let fwd = p_lambda(lambda, &PairTensor::from_pair(a, b)?)?.mu();
    let bwd = p_lambda(lambda, &PairTensor::from_pair(b, a)?)?.mu();
    Ok(fwd.sub(&bwd))
}

/// Split an element with polynomial coefficients into the list C_0, C_1, ...
/// of its parameter-free order components: a = sum_r z^r C_r.
pub fn expand_orders(a: &SymElement) -> Result<Vec<SymElement>, WeylError> {
    let mut max_order = 0usize;
    for (_, c) in a.terms() {
        if !c.is_polynomial() {
            return Err(WeylError::NotPolynomialInParameter);
        }
        max_order = max_order.max(c.numer().degree().unwrap_or(0));
    }
    let mut orders = vec![SymElement::zero(a.dim); max_order + 1];
    for (idx, c) in a.terms() {
        for (r, coeff) in c.numer().coeffs().iter().enumerate() {
            if !coeff.is_zero() {
                orders[r].add_term(idx.clone(), Scalar::from_gaussian(coeff.clone()));
            }
        }
    }
    while orders.len() > 1 && orders.last().is_some_and(|e| e.is_zero()) {
        orders.pop();
    }
    Ok(orders)
}

/// Evaluation character delta_phi: e^P -> phi^P, extended linearly.
pub fn evaluate_character(phi: &[Scalar], a: &SymElement) -> Result<Scalar, WeylError> {
    check_dims(phi.len(), a.dim, "evaluate_character")?;
    let mut acc = Scalar::zero();
    for (idx, c) in a.terms() {
        let mut term = c.clone();
        for (i, &p) in idx.0.iter().enumerate() {
            if p > 0 {
                term = &term * &phi[i].pow(p as usize);
            }
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Push an element through the algebra morphism induced by a linear map
/// V -> W, given as the images of the generators e_i.
pub fn apply_linear_map(images: &[SymElement], a: &SymElement) -> Result<SymElement, WeylError> {
    check_dims(images.len(), a.dim, "apply_linear_map")?;
    let out_dim = images.first().map(|e| e.dim).unwrap_or(0);
    let mut out = SymElement::zero(out_dim);
    for (idx, c) in a.terms() {
        let mut term = SymElement::one(out_dim);
        for (i, &p) in idx.0.iter().enumerate() {
            if p > 0 {
                term = sym_mul(&term, &sym_pow(&images[i], p)?)?;
            }
        }
        out = out.add(&term.scale(c));
    }
    Ok(out)
}

/// Serialized form of a Sym element.
#[derive(Serialize, Deserialize)]
pub struct SymElementRepr {
    pub dim: usize,
    pub param: String,
    pub terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
pub struct TermRepr {
    pub idx: Vec<u32>,
    pub coeff: Scalar,
}

impl Serialize for SymElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SymElementRepr {
            dim: self.dim,
            param: "z".to_string(),
            terms: self
                .terms
                .iter()
                .map(|(idx, coeff)| TermRepr {
                    idx: idx.0.clone(),
                    coeff: coeff.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SymElementRepr::deserialize(d)?;
        let mut e = SymElement::zero(repr.dim);
        for t in repr.terms {
            if t.idx.len() != repr.dim {
                return Err(serde::de::Error::custom(format!(
                    "term index length {} does not match dim {}",
                    t.idx.len(),
                    repr.dim
                )));
            }
            e.add_term(MultiIndex(t.idx), t.coeff);
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex(v.to_vec())
    }

    fn int(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    /// x = e_0, y = e_1 in dim 2.
    fn xy() -> (SymElement, SymElement) {
        (SymElement::generator(2, 0), SymElement::generator(2, 1))
    }

    #[test]
    fn sym_mul_is_plain_polynomial_multiplication() {
        let (x, y) = xy();
        let xy2 = sym_mul(&x, &sym_mul(&y, &y).unwrap()).unwrap();
        assert_eq!(
            xy2,
            SymElement::monomial(2, mi(&[1, 2]), int(1))
        );
        // (x + y)^2 = x^2 + 2xy + y^2
        let s = x.add(&y);
        let sq = sym_mul(&s, &s).unwrap();
        assert_eq!(sq.coeff(&mi(&[1, 1])), int(2));
        assert_eq!(sq.coeff(&mi(&[2, 0])), int(1));
    }

    #[test]
    fn p_lambda_on_x2_tensor_y() {
        // P(x^2 (x) y) = 2 Lambda(x,y) x (x) 1.
        let lambda = BilinearForm::symplectic_2d();
        let t = PairTensor::monomial_pair(2, mi(&[2, 0]), mi(&[0, 1]), int(1));
        let out = p_lambda(&lambda, &t).unwrap();
        let expected = PairTensor::monomial_pair(2, mi(&[1, 0]), mi(&[0, 0]), int(2));
        assert_eq!(out, expected);
        // A second application hits the 1 leg and dies.
        assert!(p_lambda(&lambda, &out).unwrap().is_zero());
    }

    #[test]
    fn weyl_star_commutator_of_generators() {
        let lambda = BilinearForm::symplectic_2d();
        let (x, y) = xy();
        let xy_star = weyl_star(&lambda, &x, &y).unwrap();
        let yx_star = weyl_star(&lambda, &y, &x).unwrap();
        let comm = xy_star.sub(&yx_star);
        // x * y - y * x = 2z.
        let two_z = SymElement::monomial(2, mi(&[0, 0]), &int(2) * &Scalar::param());
        assert_eq!(comm, two_z);
    }

    #[test]
    fn weyl_star_reduces_to_product_at_order_zero() {
        let lambda = BilinearForm::symplectic_2d();
        let (x, y) = xy();
        let a = x.add(&sym_mul(&y, &y).unwrap());
        let b = y.add(&SymElement::one(2));
        let star = weyl_star(&lambda, &a, &b).unwrap();
        let orders = expand_orders(&star).unwrap();
        assert_eq!(orders[0], sym_mul(&a, &b).unwrap());
    }

    #[test]
    fn unit_is_neutral() {
        let lambda = BilinearForm::symplectic_2d();
        let (x, y) = xy();
        let a = sym_mul(&x, &y).unwrap().add(&x);
        assert_eq!(weyl_star(&lambda, &a, &SymElement::one(2)).unwrap(), a);
        assert_eq!(weyl_star(&lambda, &SymElement::one(2), &a).unwrap(), a);
    }

    #[test]
    fn poisson_bracket_examples() {
        let lambda = BilinearForm::symplectic_2d();
        let (x, y) = xy();
        // {x, y} = Lambda(x,y) - Lambda(y,x) = 2.
        let b = poisson_bracket_const(&lambda, &x, &y).unwrap();
        assert_eq!(b, SymElement::monomial(2, mi(&[0, 0]), int(2)));
        // {x^2, y} = 2x {x,y}.
        let x2 = sym_mul(&x, &x).unwrap();
        let b2 = poisson_bracket_const(&lambda, &x2, &y).unwrap();
        assert_eq!(b2, SymElement::monomial(2, mi(&[1, 0]), int(4)));
    }

    #[test]
    fn order_degrees_drop_by_two() {
        // x^2 * y^2: order r lives in total degree 4 - 2r.
        let lambda = BilinearForm::symplectic_2d();
        let (x, y) = xy();
        let x2 = sym_mul(&x, &x).unwrap();
        let y2 = sym_mul(&y, &y).unwrap();
        let star = weyl_star(&lambda, &x2, &y2).unwrap();
        let orders = expand_orders(&star).unwrap();
        assert_eq!(orders.len(), 3);
        for (r, c_r) in orders.iter().enumerate() {
            assert_eq!(c_r.degree(), Some(4 - 2 * r as u32));
        }
    }

    #[test]
    fn expand_orders_rejects_true_rational_functions() {
        let s = &int(1) / &(&int(1) + &Scalar::param());
        let e = SymElement::monomial(1, mi(&[0]), s);
        assert!(matches!(
            expand_orders(&e),
            Err(WeylError::NotPolynomialInParameter)
        ));
    }

    #[test]
    fn character_is_multiplicative() {
        let (x, y) = xy();
        let phi = vec![Scalar::from_frac(1, 2), int(3)];
        let a = x.add(&SymElement::one(2));
        let b = sym_mul(&y, &y).unwrap().add(&x);
        let prod = sym_mul(&a, &b).unwrap();
        let da = evaluate_character(&phi, &a).unwrap();
        let db = evaluate_character(&phi, &b).unwrap();
        let dprod = evaluate_character(&phi, &prod).unwrap();
        assert_eq!(dprod, &da * &db);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = SymElement::generator(2, 0);
        let b = SymElement::generator(3, 0);
        assert!(matches!(
            sym_mul(&a, &b),
            Err(WeylError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn sym_element_json_roundtrip() {
        let (x, y) = xy();
        let a = sym_mul(&x, &y).unwrap().scale(&Scalar::param()).add(&x);
        let json = serde_json::to_string(&a).unwrap();
        let back: SymElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }
}
