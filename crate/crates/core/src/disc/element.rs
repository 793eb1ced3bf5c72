//! Elements of the reduced function algebra on the disc, written on the
//! basis f[P|Q] indexed by pairs of length-n multi-indices with no 0-th
//! component.
//!
//! Each basis element is the restriction of one monomial on C^{n+1}, chosen
//! by the canonical lift: the smaller of the two totals is padded in the
//! 0-th slot so the lifted pair has equal totals. Coefficients are rational
//! functions of the deformation parameter.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::multiindex::MultiIndex;
use crate::scalar::Scalar;

use super::cn::CnPolynomial;
use super::DiscError;

/// Pair of exponent vectors (P, Q) of length n, ordered and hashable so it
/// can key sparse maps and product caches.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiscIndex {
    pub p: MultiIndex,
    pub q: MultiIndex,
}

impl DiscIndex {
    pub fn new(p: MultiIndex, q: MultiIndex) -> Self {
        assert_eq!(p.dim(), q.dim(), "index pair dimensions differ");
        DiscIndex { p, q }
    }

    pub fn dim(&self) -> usize {
        self.p.dim()
    }

    /// |P| + |Q|.
    pub fn degree(&self) -> u32 {
        self.p.total() + self.q.total()
    }

    /// Lift to a monomial index pair on C^{n+1} with equal totals: the side
    /// with the smaller total gets the deficit in the 0-th slot, the other
    /// side gets 0 there.
    pub fn canonical_lift(&self) -> (MultiIndex, MultiIndex) {
        let (tp, tq) = (self.p.total(), self.q.total());
        if tq >= tp {
            (self.p.prepend(tq - tp), self.q.prepend(0))
        } else {
            (self.p.prepend(0), self.q.prepend(tp - tq))
        }
    }
}

impl fmt::Display for DiscIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f[{}|{}]", self.p, self.q)
    }
}

/// Sparse combination of basis elements f[P|Q] with rational-function
/// coefficients in the deformation parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscElement {
    n: usize,
    terms: BTreeMap<DiscIndex, Scalar>,
}

impl DiscElement {
    pub fn zero(n: usize) -> Self {
        DiscElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(
            DiscIndex::new(MultiIndex::zero(n), MultiIndex::zero(n)),
            Scalar::one(),
        )
    }

    pub fn monomial(idx: DiscIndex, coeff: Scalar) -> Self {
        let mut e = Self::zero(idx.dim());
        e.add_term(idx, coeff);
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DiscIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &DiscIndex) -> Scalar {
        self.terms.get(idx).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, idx: DiscIndex, coeff: Scalar) {
        debug_assert_eq!(idx.dim(), self.n);
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

    pub fn add(&self, other: &DiscElement) -> DiscElement {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &DiscElement) -> DiscElement {
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> DiscElement {
        let mut out = DiscElement::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (idx, a) in &self.terms {
            out.add_term(idx.clone(), a * c);
        }
        out
    }

    /// Largest |P| + |Q| over the support, None for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|idx| idx.degree()).max()
    }

    /// The combination of lifted monomials with the same coefficients.
    pub fn lift(&self) -> CnPolynomial {
        let mut out = CnPolynomial::zero(self.n);
        for (idx, c) in &self.terms {
            let (p, q) = idx.canonical_lift();
            out.add_term(p, q, c.clone());
        }
        out
    }

    /// Evaluate every coefficient at a rational parameter value; fails on a
    /// pole there.
    pub fn evaluate_param(
        &self,
        x: &crate::scalar::GaussianRational,
    ) -> Result<DiscElement, DiscError> {
        let mut out = DiscElement::zero(self.n);
        for (idx, c) in &self.terms {
            out.add_term(idx.clone(), Scalar::from_gaussian(c.eval(x)?));
        }
        Ok(out)
    }
}

impl fmt::Display for DiscElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*{}", c.display_with("h"), idx)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct DiscRepr {
    n: usize,
    terms: Vec<DiscTermRepr>,
}

#[derive(Serialize, Deserialize)]
struct DiscTermRepr {
    #[serde(rename = "P")]
    p: Vec<u32>,
    #[serde(rename = "Q")]
    q: Vec<u32>,
    coeff: Scalar,
}

impl Serialize for DiscElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DiscRepr {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(idx, coeff)| DiscTermRepr {
                    p: idx.p.0.clone(),
                    q: idx.q.0.clone(),
                    coeff: coeff.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DiscElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = DiscRepr::deserialize(d)?;
        let mut e = DiscElement::zero(repr.n);
        for t in repr.terms {
            if t.p.len() != repr.n || t.q.len() != repr.n {
                return Err(serde::de::Error::custom(format!(
                    "term index lengths ({}, {}) do not match n = {}",
                    t.p.len(),
                    t.q.len(),
                    repr.n
                )));
            }
            e.add_term(DiscIndex::new(MultiIndex(t.p), MultiIndex(t.q)), t.coeff);
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

    #[test]
    fn canonical_lift_pads_the_smaller_total() {
        // |Q| > |P|: deficit goes to the 0-th slot of the lifted P.
        let idx = DiscIndex::new(mi(&[0]), mi(&[1]));
        assert_eq!(idx.canonical_lift(), (mi(&[1, 0]), mi(&[0, 1])));
        // |P| > |Q|: mirrored.
        let idx = DiscIndex::new(mi(&[2]), mi(&[0]));
        assert_eq!(idx.canonical_lift(), (mi(&[0, 2]), mi(&[2, 0])));
        // Equal totals: no padding on either side.
        let idx = DiscIndex::new(mi(&[1, 1]), mi(&[2, 0]));
        assert_eq!(idx.canonical_lift(), (mi(&[0, 1, 1]), mi(&[0, 2, 0])));
    }

    #[test]
    fn lifted_totals_always_match() {
        for p0 in 0..4u32 {
            for q0 in 0..4u32 {
                let idx = DiscIndex::new(mi(&[p0, 1]), mi(&[0, q0]));
                let (lp, lq) = idx.canonical_lift();
                assert_eq!(lp.total(), lq.total());
                assert!(lp[0] == 0 || lq[0] == 0);
            }
        }
    }

    #[test]
    fn lift_of_element_is_invariant() {
        let mut e = DiscElement::one(2);
        e.add_term(
            DiscIndex::new(mi(&[1, 0]), mi(&[0, 2])),
            Scalar::param(),
        );
        e.add_term(DiscIndex::new(mi(&[1, 1]), mi(&[1, 1])), Scalar::from_int(3));
        assert!(e.lift().is_invariant());
    }

    #[test]
    fn addition_cancels_terms() {
        let idx = DiscIndex::new(mi(&[1]), mi(&[1]));
        let a = DiscElement::monomial(idx.clone(), Scalar::one());
        let b = DiscElement::monomial(idx, Scalar::from_int(-1));
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn json_roundtrip_and_length_validation() {
        let mut e = DiscElement::zero(2);
        e.add_term(
            DiscIndex::new(mi(&[1, 0]), mi(&[0, 1])),
            Scalar::param_pow(crate::scalar::GaussianRational::from_int(2), 1),
        );
        let json = serde_json::to_string(&e).unwrap();
        let back: DiscElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e);

        let bad = r#"{"n":2,"terms":[{"P":[1],"Q":[0,1],"coeff":{"num":[["1","1","0","1"]],"den":[["1","1","0","1"]]}}]}"#;
        assert!(serde_json::from_str::<DiscElement>(bad).is_err());
    }

    #[test]
    fn display_is_readable() {
        let e = DiscElement::monomial(
            DiscIndex::new(mi(&[1]), mi(&[2])),
            Scalar::param(),
        );
        assert_eq!(format!("{}", e), "(h)*f[(1)|(2)]");
    }
}
