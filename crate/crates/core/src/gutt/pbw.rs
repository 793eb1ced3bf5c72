//! The universal enveloping algebra in its ordered-monomial basis, and the
//! star product on polynomials it induces.
//!
//! Monomials e_0^{a_0} ... e_{d-1}^{a_{d-1}} with letters in ascending order
//! form the Poincare-Birkhoff-Witt basis of U(g). Multiplication straightens
//! words one letter at a time with the rewrite e_i e_j = e_j e_i + [e_i, e_j]
//! for i > j; both the letter products and the symmetrization
//!
//! ```text
//! q(e^P) = (1/|P|) sum_i P_i q(e^{P - d_i}) e_i,   q(1) = 1,
//! ```
//!
//! are memoized, since the same monomials recur heavily inside larger
//! products. q is a linear isomorphism Sym(g) -> U(g) with q(e^P) = e^P plus
//! lower-degree terms, so its inverse is a degree-descending back
//! substitution. The star product with formal parameter z is
//!
//! ```text
//! x (star) y = sum_{k,l,m} z^{k+l-m} pr_m( q^{-1}( q(x_k) q(y_l) ) )
//! ```
//!
//! over homogeneous parts x_k, y_l and degree-m projections pr_m.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use serde::{Deserialize, Serialize};

use crate::gutt::lie::{GuttError, LieStructure};
use crate::multiindex::MultiIndex;
use crate::scalar::{GaussianRational, Scalar};
use crate::weyl::SymElement;

/// An element of U(g) in the ordered-monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UEAElement {
    dim: usize,
    terms: BTreeMap<MultiIndex, Scalar>,
}

impl UEAElement {
    pub fn zero(dim: usize) -> Self {
        UEAElement {
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

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &MultiIndex) -> Scalar {
        self.terms.get(idx).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|p| p.total()).max()
    }

    pub fn add_term(&mut self, idx: MultiIndex, coeff: Scalar) {
        debug_assert_eq!(idx.dim(), self.dim);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
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

    pub fn add(&self, other: &UEAElement) -> UEAElement {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &UEAElement) -> UEAElement {
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> UEAElement {
        let mut out = UEAElement::zero(self.dim);
        if c.is_zero() {
            return out;
        }
        for (idx, a) in &self.terms {
            out.add_term(idx.clone(), a * c);
        }
        out
    }

    /// Reinterpret the coefficient table as a Sym element (forgetting the
    /// noncommutative product). This is a basis identification, not q^{-1}.
    pub fn as_sym_shape(&self) -> SymElement {
        let mut out = SymElement::zero(self.dim);
        for (idx, c) in &self.terms {
            out.add_term(idx.clone(), c.clone());
        }
        out
    }
}

/// Constant-coefficient sparse table, the payload of the memo caches.
type ConstMap = BTreeMap<MultiIndex, GaussianRational>;

fn map_add_scaled(acc: &mut ConstMap, addend: &ConstMap, c: &GaussianRational) {
    if c.is_zero() {
        return;
    }
    for (idx, v) in addend {
        let delta = v * c;
        match acc.entry(idx.clone()) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(delta);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &delta;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }
}

/// Multiplication and symmetrization engine for one Lie structure, with
/// memoized straightening tables.
pub struct PbwEngine {
    lie: LieStructure,
    /// e^A e_j expanded in the ordered basis.
    letter_cache: HashMap<(MultiIndex, usize), Rc<ConstMap>>,
    /// e^A e^B expanded in the ordered basis.
    pair_cache: HashMap<(MultiIndex, MultiIndex), Rc<ConstMap>>,
    /// q(e^P) expanded in the ordered basis.
    q_cache: HashMap<MultiIndex, Rc<ConstMap>>,
}

impl PbwEngine {
    pub fn new(lie: LieStructure) -> Self {
        PbwEngine {
            lie,
            letter_cache: HashMap::new(),
            pair_cache: HashMap::new(),
            q_cache: HashMap::new(),
        }
    }

    pub fn lie(&self) -> &LieStructure {
        &self.lie
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    fn check_dim(&self, got: usize, context: &'static str) -> Result<(), GuttError> {
        if got != self.dim() {
            return Err(GuttError::Sym(crate::weyl::WeylError::DimensionMismatch {
                left: got,
                right: self.dim(),
                context,
            }));
        }
        Ok(())
    }

    /// e^a e_j in the ordered basis. Straightening rewrites the top letter
    /// i of a past e_j when i > j, producing a reordered word plus a
    /// bracket term of lower degree; both recurse on smaller inputs.
    fn mono_times_letter(&mut self, a: &MultiIndex, j: usize) -> Rc<ConstMap> {
        let key = (a.clone(), j);
        if let Some(hit) = self.letter_cache.get(&key) {
            return Rc::clone(hit);
        }
        let top = a.0.iter().rposition(|&p| p > 0);
        let result: ConstMap = match top {
            Some(i) if i > j => {
                let a1 = a.with_bumped(i, -1);
                // e^a e_j = (e^{a1} e_j) e_i + e^{a1} [e_i, e_j].
                let left = self.mono_times_letter(&a1, j);
                let mut acc = ConstMap::new();
                for (b, c) in left.iter() {
                    let bi = self.mono_times_letter(b, i);
                    map_add_scaled(&mut acc, &bi, c);
                }
                for k in 0..self.dim() {
                    let cijk = self.lie.coeff(i, j, k).clone();
                    if cijk.is_zero() {
                        continue;
                    }
                    let t = self.mono_times_letter(&a1, k);
                    map_add_scaled(&mut acc, &t, &cijk);
                }
                acc
            }
            // Letters already in order: append.
            _ => {
                let mut m = ConstMap::new();
                m.insert(a.with_bumped(j, 1), GaussianRational::one());
                m
            }
        };
        let rc = Rc::new(result);
        self.letter_cache.insert(key, Rc::clone(&rc));
        rc
    }

    /// e^a e^b in the ordered basis, folding in the letters of b.
    fn mono_times_mono(&mut self, a: &MultiIndex, b: &MultiIndex) -> Rc<ConstMap> {
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.pair_cache.get(&key) {
            return Rc::clone(hit);
        }
        let mut cur = ConstMap::new();
        cur.insert(a.clone(), GaussianRational::one());
        for (j, &mult) in b.0.iter().enumerate() {
            for _ in 0..mult {
                let mut next = ConstMap::new();
                let monos: Vec<(MultiIndex, GaussianRational)> =
                    cur.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
                for (m, c) in monos {
                    let prod = self.mono_times_letter(&m, j);
                    map_add_scaled(&mut next, &prod, &c);
                }
                cur = next;
            }
        }
        let rc = Rc::new(cur);
        self.pair_cache.insert(key, Rc::clone(&rc));
        rc
    }

    /// Product in U(g).
    pub fn ue_mul(&mut self, x: &UEAElement, y: &UEAElement) -> Result<UEAElement, GuttError> {
        self.check_dim(x.dim, "ue_mul left")?;
        self.check_dim(y.dim, "ue_mul right")?;
        let mut out = UEAElement::zero(self.dim());
        for (a, ca) in &x.terms {
            for (b, cb) in &y.terms {
                let prod = self.mono_times_mono(a, b);
                let c = ca * cb;
                for (m, v) in prod.iter() {
                    out.add_term(m.clone(), &c * &Scalar::from_gaussian(v.clone()));
                }
            }
        }
        Ok(out)
    }

    /// q(e^P), memoized through the one-sided recursion in the module doc.
    fn symmetrize_mono(&mut self, p: &MultiIndex) -> Rc<ConstMap> {
        if let Some(hit) = self.q_cache.get(p) {
            return Rc::clone(hit);
        }
        let n = p.total();
        let result: ConstMap = if n == 0 {
            let mut m = ConstMap::new();
            m.insert(MultiIndex::zero(p.dim()), GaussianRational::one());
            m
        } else {
            let inv_n = GaussianRational::from_rational(num_rational::BigRational::new(
                1.into(),
                n.into(),
            ));
            let mut acc = ConstMap::new();
            for i in 0..p.dim() {
                if p[i] == 0 {
                    continue;
                }
                let prev = self.symmetrize_mono(&p.with_bumped(i, -1));
                let weight = &GaussianRational::from_int(p[i] as i64) * &inv_n;
                let monos: Vec<(MultiIndex, GaussianRational)> =
                    prev.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
                for (b, c) in monos {
                    let bi = self.mono_times_letter(&b, i);
                    map_add_scaled(&mut acc, &bi, &(&c * &weight));
                }
            }
            acc
        };
        let rc = Rc::new(result);
        self.q_cache.insert(p.clone(), Rc::clone(&rc));
        rc
    }

    /// The symmetrization map Sym(g) -> U(g), extended linearly.
    pub fn symmetrize(&mut self, x: &SymElement) -> Result<UEAElement, GuttError> {
        self.check_dim(x.dim(), "symmetrize")?;
        let mut out = UEAElement::zero(self.dim());
        for (p, c) in x.terms() {
            let q = self.symmetrize_mono(p);
            for (m, v) in q.iter() {
                out.add_term(m.clone(), c * &Scalar::from_gaussian(v.clone()));
            }
        }
        Ok(out)
    }

    /// The inverse of symmetrization: q(e^P) = e^P + lower-degree terms, so
    /// peel the top degree and subtract its image until nothing remains.
    pub fn desymmetrize(&mut self, u: &UEAElement) -> Result<SymElement, GuttError> {
        self.check_dim(u.dim, "desymmetrize")?;
        let mut rem = u.clone();
        let mut out = SymElement::zero(self.dim());
        while let Some(n) = rem.degree() {
            let top: Vec<(MultiIndex, Scalar)> = rem
                .terms
                .iter()
                .filter(|(p, _)| p.total() == n)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect();
            for (p, c) in &top {
                out.add_term(p.clone(), c.clone());
                let q = self.symmetrize_mono(p);
                for (m, v) in q.iter() {
                    rem.add_term(m.clone(), -&(c * &Scalar::from_gaussian(v.clone())));
                }
            }
            debug_assert!(
                rem.degree().map_or(true, |d| d < n),
                "top degree must strictly drop"
            );
        }
        Ok(out)
    }

    /// The star product with formal parameter z.
    pub fn gutt_star(
        &mut self,
        x: &SymElement,
        y: &SymElement,
    ) -> Result<SymElement, GuttError> {
        self.check_dim(x.dim(), "gutt_star left")?;
        self.check_dim(y.dim(), "gutt_star right")?;
        let mut out = SymElement::zero(self.dim());
        for (k, xk) in x.components() {
            let qx = self.symmetrize(&xk)?;
            for (l, yl) in y.components() {
                let qy = self.symmetrize(&yl)?;
                let u = self.ue_mul(&qx, &qy)?;
                let s = self.desymmetrize(&u)?;
                for (m, sm) in s.components() {
                    debug_assert!(m <= k + l, "product degree exceeds input degrees");
                    let weight = Scalar::param_pow(
                        GaussianRational::one(),
                        (k + l - m) as usize,
                    );
                    out = out.add(&sm.map_coeffs(|c| c * &weight));
                }
            }
        }
        Ok(out)
    }
}

/// The counit: the coefficient of the constant monomial. Multiplicative for
/// the star product.
pub fn counit(x: &SymElement) -> Scalar {
    x.coeff(&MultiIndex::zero(x.dim()))
}

/// The linear Poisson bracket on Sym(g):
/// {f, g} = sum_{i,j,k} c_{ij}^k e_k (df/de_i)(dg/de_j).
pub fn poisson_bracket_linear(
    lie: &LieStructure,
    a: &SymElement,
    b: &SymElement,
) -> Result<SymElement, GuttError> {
    let d = lie.dim();
    if a.dim() != d || b.dim() != d {
        return Err(GuttError::Sym(crate::weyl::WeylError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
            context: "poisson_bracket_linear",
        }));
    }
    let mut out = SymElement::zero(d);
    for (p, cp) in a.terms() {
        for (q, cq) in b.terms() {
            for i in 0..d {
                if p[i] == 0 {
                    continue;
                }
                for j in 0..d {
                    if q[j] == 0 {
                        continue;
                    }
                    let count = Scalar::from_int((p[i] as i64) * (q[j] as i64));
                    let base = &(cp * cq) * &count;
                    for k in 0..d {
                        let c = lie.coeff(i, j, k);
                        if c.is_zero() {
                            continue;
                        }
                        let idx = p
                            .with_bumped(i, -1)
                            .add(&q.with_bumped(j, -1))
                            .with_bumped(k, 1);
                        out.add_term(idx, &base * &Scalar::from_gaussian(c.clone()));
                    }
                }
            }
        }
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct UEARepr {
    dim: usize,
    basis: String,
    terms: Vec<crate::weyl::TermRepr>,
}

impl Serialize for UEAElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        UEARepr {
            dim: self.dim,
            basis: "pbw".to_string(),
            terms: self
                .terms
                .iter()
                .map(|(idx, coeff)| crate::weyl::TermRepr {
                    idx: idx.0.clone(),
                    coeff: coeff.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for UEAElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = UEARepr::deserialize(d)?;
        if repr.basis != "pbw" {
            return Err(serde::de::Error::custom(format!(
                "unknown basis '{}', expected 'pbw'",
                repr.basis
            )));
        }
        let mut e = UEAElement::zero(repr.dim);
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
