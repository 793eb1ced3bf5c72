//! Multi-indices P in N_0^d with the componentwise order and the usual
//! combinatorial quantities |P|, P!, binom(P, T).

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zero(dim: usize) -> Self {
        MultiIndex(vec![0; dim])
    }

    /// The standard unit index with a 1 in slot i.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        MultiIndex(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// |P| = sum of the entries.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// P! = prod of entry factorials.
    pub fn factorial(&self) -> BigInt {
        self.0.iter().map(|&x| factorial(x)).product()
    }

    /// Componentwise P <= Q.
    pub fn leq(&self, other: &MultiIndex) -> bool {
        self.0.len() == other.0.len()
            && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.0.len(), other.0.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, None if any entry would go negative.
    pub fn sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        if !other.leq(self) {
            return None;
        }
        Some(MultiIndex(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn min(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.0.len(), other.0.len());
        MultiIndex(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// Componentwise product of binomials binom(P_i, T_i); zero if T !<= P.
    pub fn binom(&self, t: &MultiIndex) -> BigInt {
        if !t.leq(self) {
            return BigInt::from(0);
        }
        self.0
            .iter()
            .zip(&t.0)
            .map(|(&p, &t)| binomial(p, t))
            .product()
    }

    pub fn with_bumped(&self, i: usize, delta: i32) -> MultiIndex {
        let mut v = self.0.clone();
        v[i] = (v[i] as i32 + delta) as u32;
        MultiIndex(v)
    }

    /// Append entries of `other` after `self` (block concatenation).
    pub fn concat(&self, other: &MultiIndex) -> MultiIndex {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        MultiIndex(v)
    }

    /// Prepend a single entry.
    pub fn prepend(&self, head: u32) -> MultiIndex {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(head);
        v.extend_from_slice(&self.0);
        MultiIndex(v)
    }

    /// Drop the first entry, returning (head, tail).
    pub fn split_head(&self) -> (u32, MultiIndex) {
        (self.0[0], MultiIndex(self.0[1..].to_vec()))
    }

    /// All indices of the given dimension with |P| = total, in lexicographic
    /// order.
    pub fn all_with_total(dim: usize, total: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; dim];
        fn rec(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<MultiIndex>) {
            if pos + 1 == cur.len() {
                cur[pos] = left;
                out.push(MultiIndex(cur.clone()));
                return;
            }
            for v in 0..=left {
                cur[pos] = v;
                rec(cur, pos + 1, left - v, out);
            }
        }
        if dim == 0 {
            if total == 0 {
                out.push(MultiIndex(Vec::new()));
            }
            return out;
        }
        rec(&mut cur, 0, total, &mut out);
        out
    }

    /// All indices with |P| <= cap, ascending in |P| then lexicographic.
    pub fn all_up_to(dim: usize, cap: u32) -> Vec<MultiIndex> {
        (0..=cap)
            .flat_map(|t| Self::all_with_total(dim, t))
            .collect()
    }

    /// All T with T <= self componentwise (the hypercube of subindices).
    pub fn sub_indices(&self) -> Vec<MultiIndex> {
        let mut out = vec![MultiIndex::zero(0)];
        for &cap in &self.0 {
            let mut next = Vec::with_capacity(out.len() * (cap as usize + 1));
            for prefix in &out {
                for v in 0..=cap {
                    let mut w = prefix.0.clone();
                    w.push(v);
                    next.push(MultiIndex(w));
                }
            }
            out = next;
        }
        out
    }
}

impl Index<usize> for MultiIndex {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= k;
    }
    acc
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k as u64 {
        acc = acc * (n as u64 - j) / (j + 1);
    }
    acc
}
