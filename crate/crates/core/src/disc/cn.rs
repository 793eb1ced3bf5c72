//! Polynomials on C^{n+1} in the monomial basis z^P zbar^Q, with the
//! normal-ordered star product attached to the indefinite metric
//! diag(-1, 1, ..., 1).
//!
//! The product pairs holomorphic derivatives of the left factor with
//! antiholomorphic derivatives of the right one; on monomials it closes as
//!
//! ```text
//! d_{P,Q} (star) d_{R,S} = sum_{t <= min(P,S)} (2h)^{|t|} (-1)^{t_0}
//!     (P!/(P-t)!) (S!/(S-t)!) (1/t!) d_{P-t+R, Q+S-t},
//! ```
//!
//! the sign coming from the 0-th metric coefficient. Phase rotation of all
//! coordinates scales a term by the charge |P| - |Q|, so the charge-zero
//! terms are exactly the rotation-invariant ones, and the product conserves
//! charge term by term.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::multiindex::MultiIndex;
use crate::scalar::{GaussianRational, Scalar};

use super::DiscError;

/// Sparse polynomial sum of a_{P,Q} z^P zbar^Q with P, Q of length n + 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnPolynomial {
    n: usize,
    terms: BTreeMap<(MultiIndex, MultiIndex), Scalar>,
}

impl CnPolynomial {
    pub fn zero(n: usize) -> Self {
        CnPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(
            n,
            MultiIndex::zero(n + 1),
            MultiIndex::zero(n + 1),
            Scalar::one(),
        )
    }

    /// The monomial c z^P zbar^Q.
    pub fn monomial(n: usize, p: MultiIndex, q: MultiIndex, coeff: Scalar) -> Self {
        assert_eq!(p.dim(), n + 1, "holomorphic index has wrong length");
        assert_eq!(q.dim(), n + 1, "antiholomorphic index has wrong length");
        let mut e = Self::zero(n);
        e.add_term(p, q, coeff);
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

    pub fn terms(&self) -> impl Iterator<Item = (&(MultiIndex, MultiIndex), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &MultiIndex, q: &MultiIndex) -> Scalar {
        self.terms
            .get(&(p.clone(), q.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, p: MultiIndex, q: MultiIndex, coeff: Scalar) {
        debug_assert_eq!(p.dim(), self.n + 1);
        debug_assert_eq!(q.dim(), self.n + 1);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((p, q)) {
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

    pub fn add(&self, other: &CnPolynomial) -> CnPolynomial {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for ((p, q), c) in &other.terms {
            out.add_term(p.clone(), q.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CnPolynomial) -> CnPolynomial {
        let mut out = self.clone();
        for ((p, q), c) in &other.terms {
            out.add_term(p.clone(), q.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> CnPolynomial {
        let mut out = CnPolynomial::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for ((p, q), a) in &self.terms {
            out.add_term(p.clone(), q.clone(), a * c);
        }
        out
    }

    /// Pointwise (commutative) product.
    pub fn mul(&self, other: &CnPolynomial) -> Result<CnPolynomial, DiscError> {
        check_n(self.n, other.n, "pointwise product")?;
        let mut out = CnPolynomial::zero(self.n);
        for ((p, q), a) in &self.terms {
            for ((r, s), b) in &other.terms {
                out.add_term(p.add(r), q.add(s), a * b);
            }
        }
        Ok(out)
    }

    /// True when every term has matching holomorphic and antiholomorphic
    /// total degree, i.e. the polynomial is invariant under a common phase
    /// rotation of all coordinates.
    pub fn is_invariant(&self) -> bool {
        self.terms.keys().all(|(p, q)| p.total() == q.total())
    }

    /// Largest |P| + |Q| over the support, None for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(p, q)| p.total() + q.total()).max()
    }
}

fn check_n(left: usize, right: usize, context: &'static str) -> Result<(), DiscError> {
    if left != right {
        return Err(DiscError::DimensionMismatch {
            left,
            right,
            context,
        });
    }
    Ok(())
}

/// The quadratic function of the metric: g = -z^0 zbar^0 + sum_k z^k zbar^k.
pub fn metric_function(n: usize) -> CnPolynomial {
    assert!(n >= 1, "disc dimension must be at least 1");
    let mut g = CnPolynomial::zero(n);
    g.add_term(
        MultiIndex::unit(n + 1, 0),
        MultiIndex::unit(n + 1, 0),
        Scalar::from_int(-1),
    );
    for k in 1..=n {
        g.add_term(
            MultiIndex::unit(n + 1, k),
            MultiIndex::unit(n + 1, k),
            Scalar::one(),
        );
    }
    g
}

/// g - 1, the generator of the restriction kernel.
pub fn metric_minus_one(n: usize) -> CnPolynomial {
    let mut g = metric_function(n);
    g.add_term(
        MultiIndex::zero(n + 1),
        MultiIndex::zero(n + 1),
        Scalar::from_int(-1),
    );
    g
}

/// Normal-ordered star product on C^{n+1} with parameter h.
pub fn wick_star(a: &CnPolynomial, b: &CnPolynomial) -> Result<CnPolynomial, DiscError> {
    check_n(a.n, b.n, "wick_star")?;
    let mut out = CnPolynomial::zero(a.n);
    for ((p, q), ca) in &a.terms {
        for ((r, s), cb) in &b.terms {
            let base = ca * cb;
            for t in p.min(s).sub_indices() {
                // (2h)^{|t|} (-1)^{t_0} P!/(P-t)! S!/(S-t)! / t!.
                let falling = |top: &MultiIndex, low: &MultiIndex| -> BigRational {
                    BigRational::from_integer(
                        &top.factorial()
                            / &top.sub(low).expect("t <= top by construction").factorial(),
                    )
                };
                let mut rat = &falling(p, &t) * &falling(s, &t);
                rat /= BigRational::from_integer(t.factorial());
                let mut coeff = GaussianRational::from_rational(rat);
                for _ in 0..t.total() {
                    coeff = &coeff * &GaussianRational::from_int(2);
                }
                if t[0] % 2 == 1 {
                    coeff = -&coeff;
                }
                let weight = Scalar::param_pow(coeff, t.total() as usize);
                let zp = p.sub(&t).expect("t <= p").add(r);
                let zq = q.add(&s.sub(&t).expect("t <= s"));
                out.add_term(zp, zq, &base * &weight);
            }
        }
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct CnRepr {
    n: usize,
    terms: Vec<CnTermRepr>,
}

#[derive(Serialize, Deserialize)]
struct CnTermRepr {
    #[serde(rename = "P")]
    p: Vec<u32>,
    #[serde(rename = "Q")]
    q: Vec<u32>,
    coeff: Scalar,
}

impl Serialize for CnPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CnRepr {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|((p, q), coeff)| CnTermRepr {
                    p: p.0.clone(),
                    q: q.0.clone(),
                    coeff: coeff.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CnPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = CnRepr::deserialize(d)?;
        let mut e = CnPolynomial::zero(repr.n);
        for t in repr.terms {
            if t.p.len() != repr.n + 1 || t.q.len() != repr.n + 1 {
                return Err(serde::de::Error::custom(format!(
                    "term index lengths ({}, {}) do not match n + 1 = {}",
                    t.p.len(),
                    t.q.len(),
                    repr.n + 1
                )));
            }
            e.add_term(MultiIndex(t.p), MultiIndex(t.q), t.coeff);
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{weyl_star, BilinearForm, SymElement};

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex(v.to_vec())
    }

    fn int(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn metric_function_shape() {
        let g = metric_function(1);
        assert_eq!(g.coeff(&mi(&[1, 0]), &mi(&[1, 0])), int(-1));
        assert_eq!(g.coeff(&mi(&[0, 1]), &mi(&[0, 1])), int(1));
        assert_eq!(g.num_terms(), 2);
        assert!(g.is_invariant());
    }

    #[test]
    fn invariance_flag_checks_total_degrees() {
        let mut a = CnPolynomial::zero(1);
        a.add_term(mi(&[1, 0]), mi(&[0, 1]), int(1));
        assert!(a.is_invariant());
        a.add_term(mi(&[1, 0]), mi(&[0, 0]), int(1));
        assert!(!a.is_invariant());
    }

    #[test]
    fn star_with_no_contractions_is_pointwise() {
        // zbar-only left factor against z-only right factor: t = 0 forced.
        let a = CnPolynomial::monomial(1, mi(&[0, 0]), mi(&[0, 2]), int(1));
        let b = CnPolynomial::monomial(1, mi(&[1, 0]), mi(&[0, 0]), int(1));
        let star = wick_star(&a, &b).unwrap();
        assert_eq!(star, a.mul(&b).unwrap());
    }

    #[test]
    fn single_contraction_signs() {
        // z^0 (star) zbar^0 = z^0 zbar^0 - 2h; z^1 (star) zbar^1 picks +2h.
        let z0 = CnPolynomial::monomial(1, mi(&[1, 0]), mi(&[0, 0]), int(1));
        let z0bar = CnPolynomial::monomial(1, mi(&[0, 0]), mi(&[1, 0]), int(1));
        let star = wick_star(&z0, &z0bar).unwrap();
        let mut expected = CnPolynomial::monomial(1, mi(&[1, 0]), mi(&[1, 0]), int(1));
        expected.add_term(
            mi(&[0, 0]),
            mi(&[0, 0]),
            Scalar::param_pow(GaussianRational::from_int(-2), 1),
        );
        assert_eq!(star, expected);

        let z1 = CnPolynomial::monomial(1, mi(&[0, 1]), mi(&[0, 0]), int(1));
        let z1bar = CnPolynomial::monomial(1, mi(&[0, 0]), mi(&[0, 1]), int(1));
        let star1 = wick_star(&z1, &z1bar).unwrap();
        let mut expected1 = CnPolynomial::monomial(1, mi(&[0, 1]), mi(&[0, 1]), int(1));
        expected1.add_term(
            mi(&[0, 0]),
            mi(&[0, 0]),
            Scalar::param_pow(GaussianRational::from_int(2), 1),
        );
        assert_eq!(star1, expected1);
    }

    #[test]
    fn reverse_order_has_no_contraction() {
        // zbar^0 (star) z^0: the left factor has no z part, so the product
        // is pointwise; the commutator with the previous test is 2h.
        let z0 = CnPolynomial::monomial(1, mi(&[1, 0]), mi(&[0, 0]), int(1));
        let z0bar = CnPolynomial::monomial(1, mi(&[0, 0]), mi(&[1, 0]), int(1));
        let rev = wick_star(&z0bar, &z0).unwrap();
        assert_eq!(rev, z0bar.mul(&z0).unwrap());
    }

    #[test]
    fn unit_is_neutral() {
        let mut a = CnPolynomial::monomial(1, mi(&[2, 1]), mi(&[1, 1]), int(3));
        a.add_term(mi(&[0, 1]), mi(&[0, 1]), Scalar::param());
        let one = CnPolynomial::one(1);
        assert_eq!(wick_star(&a, &one).unwrap(), a);
        assert_eq!(wick_star(&one, &a).unwrap(), a);
    }

    #[test]
    fn star_is_associative() {
        let a = CnPolynomial::monomial(1, mi(&[1, 1]), mi(&[0, 1]), int(1));
        let b = CnPolynomial::monomial(1, mi(&[1, 0]), mi(&[1, 1]), int(1));
        let mut c = CnPolynomial::monomial(1, mi(&[0, 1]), mi(&[1, 0]), int(2));
        c.add_term(mi(&[0, 0]), mi(&[0, 0]), int(1));
        let ab = wick_star(&a, &b).unwrap();
        let bc = wick_star(&b, &c).unwrap();
        assert_eq!(
            wick_star(&ab, &c).unwrap(),
            wick_star(&a, &bc).unwrap()
        );
    }

    #[test]
    fn product_of_invariants_is_invariant() {
        let g = metric_function(2);
        let gg = wick_star(&g, &g).unwrap();
        assert!(gg.is_invariant());
        let d = CnPolynomial::monomial(2, mi(&[1, 1, 0]), mi(&[0, 1, 1]), int(1));
        let gd = wick_star(&g, &d).unwrap();
        assert!(gd.is_invariant());
    }

    /// Independent route: embed z^0..z^n, zbar^0..zbar^n as 2(n+1) formal
    /// generators and take the constant-form star product whose only pairing
    /// is (z-side, zbar-side) with weight twice the metric. The two engines
    /// must agree on every product.
    #[test]
    fn matches_constant_form_engine_under_embedding() {
        let n = 1usize;
        let dim = 2 * (n + 1);
        let mut lambda = BilinearForm::zero(dim);
        // Lambda(z^mu, zbar^nu) = 2 g^{mu nu}; zbar-z pairings stay zero.
        lambda.set(0, n + 1, Scalar::from_int(-2));
        for k in 1..=n {
            lambda.set(k, n + 1 + k, Scalar::from_int(2));
        }
        let embed = |a: &CnPolynomial| -> SymElement {
            let mut e = SymElement::zero(dim);
            for ((p, q), c) in a.terms() {
                let idx = MultiIndex(
                    p.0.iter().chain(q.0.iter()).copied().collect::<Vec<_>>(),
                );
                e.add_term(idx, c.clone());
            }
            e
        };
        let samples = [
            CnPolynomial::monomial(n, mi(&[1, 0]), mi(&[1, 0]), int(1)),
            CnPolynomial::monomial(n, mi(&[0, 2]), mi(&[1, 1]), int(1)),
            metric_function(n),
            {
                let mut a = CnPolynomial::monomial(n, mi(&[1, 1]), mi(&[2, 0]), int(2));
                a.add_term(mi(&[0, 0]), mi(&[0, 1]), int(-1));
                a
            },
        ];
        for a in &samples {
            for b in &samples {
                let direct = embed(&wick_star(a, b).unwrap());
                let via_form = weyl_star(&lambda, &embed(a), &embed(b)).unwrap();
                assert_eq!(direct, via_form);
            }
        }
    }

    #[test]
    fn cn_polynomial_json_roundtrip() {
        let mut a = metric_minus_one(2);
        a.add_term(mi(&[1, 0, 1]), mi(&[0, 1, 1]), Scalar::param());
        let json = serde_json::to_string(&a).unwrap();
        let back: CnPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }
}
