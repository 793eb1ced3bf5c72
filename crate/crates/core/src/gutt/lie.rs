//! Finite-dimensional Lie algebra data over the Gaussian rationals.
//!
//! A Lie structure is the table c_{ij}^k with [e_i, e_j] = sum_k c_{ij}^k e_k.
//! Construction takes the strictly-upper rows (i < j), fills the rest by
//! antisymmetry, and verifies the Jacobi identity exactly, reporting the
//! first violating basis triple. Alongside the bracket itself the module
//! provides the lower central series (computed by exact row reduction), a
//! nilpotency test, and the weighted submultiplicativity constant used to
//! compare bracket growth against seminorms.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::scalar::GaussianRational;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GuttError {
    #[error("bracket row ({i},{j}) must satisfy i < j < dim")]
    BadBracketIndex { i: usize, j: usize },
    #[error("bracket row ({i},{j}) has {got} coefficients, expected {expected}")]
    BadBracketLength { i: usize, j: usize, got: usize, expected: usize },
    #[error("Jacobi identity fails on basis triple ({i},{j},{k})")]
    JacobiViolated { i: usize, j: usize, k: usize },
    #[error("weights must be positive, one per dimension")]
    BadWeights,
    #[error("modulus of a structure constant is irrational; exact estimate unavailable")]
    IrrationalModulus,
    #[error("operation requires a nilpotent Lie algebra")]
    NotNilpotent,
    #[error("truncation order {got} is out of range 1..={max}")]
    OrderOutOfRange { got: u32, max: u32 },
    #[error(transparent)]
    Sym(#[from] crate::weyl::WeylError),
}

/// Structure constants of a Lie algebra on basis e_0..e_{dim-1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieStructure {
    dim: usize,
    /// c[(i*dim + j)*dim + k] = coefficient of e_k in [e_i, e_j].
    c: Vec<GaussianRational>,
}

impl LieStructure {
    /// Build from strictly-upper bracket rows: (i, j, [e_i,e_j] coefficients)
    /// with i < j. Antisymmetry is filled in; Jacobi is verified.
    pub fn from_brackets(
        dim: usize,
        rows: &[(usize, usize, Vec<GaussianRational>)],
    ) -> Result<Self, GuttError> {
        let mut c = vec![GaussianRational::zero(); dim * dim * dim];
        for (i, j, coeffs) in rows {
            let (i, j) = (*i, *j);
            if i >= j || j >= dim {
                return Err(GuttError::BadBracketIndex { i, j });
            }
            if coeffs.len() != dim {
                return Err(GuttError::BadBracketLength {
                    i,
                    j,
                    got: coeffs.len(),
                    expected: dim,
                });
            }
            for (k, v) in coeffs.iter().enumerate() {
                c[(i * dim + j) * dim + k] = v.clone();
                c[(j * dim + i) * dim + k] = -v;
            }
        }
        let lie = LieStructure { dim, c };
        lie.check_jacobi()?;
        Ok(lie)
    }

    fn check_jacobi(&self) -> Result<(), GuttError> {
        let d = self.dim;
        for i in 0..d {
            for j in (i + 1)..d {
                for k in (j + 1)..d {
                    // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0.
                    let mut total = vec![GaussianRational::zero(); d];
                    for (a, b, e) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for m in 0..d {
                            let c_ab = self.coeff(a, b, m);
                            if c_ab.is_zero() {
                                continue;
                            }
                            for l in 0..d {
                                let c_mk = self.coeff(m, e, l);
                                if !c_mk.is_zero() {
                                    total[l] = &total[l] + &(c_ab * c_mk);
                                }
                            }
                        }
                    }
                    if total.iter().any(|v| !v.is_zero()) {
                        return Err(GuttError::JacobiViolated { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient of e_k in [e_i, e_j].
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &GaussianRational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket_vec(
        &self,
        x: &[GaussianRational],
        y: &[GaussianRational],
    ) -> Vec<GaussianRational> {
        assert_eq!(x.len(), self.dim, "bracket argument dimension");
        assert_eq!(y.len(), self.dim, "bracket argument dimension");
        let mut out = vec![GaussianRational::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.coeff(i, j, k);
                    if !c.is_zero() {
                        *slot = &*slot + &(&xy * c);
                    }
                }
            }
        }
        out
    }

    /// The Heisenberg algebra: basis (p, q, e) with [p, q] = e, e central.
    pub fn heisenberg() -> Self {
        let one = GaussianRational::one();
        Self::from_brackets(
            3,
            &[(0, 1, vec![GaussianRational::zero(), GaussianRational::zero(), one])],
        )
        .expect("heisenberg table is valid")
    }

    /// so(3): [e_0,e_1] = e_2, [e_1,e_2] = e_0, [e_2,e_0] = e_1.
    pub fn so3() -> Self {
        let z = GaussianRational::zero;
        let one = GaussianRational::one;
        Self::from_brackets(
            3,
            &[
                (0, 1, vec![z(), z(), one()]),
                (1, 2, vec![one(), z(), z()]),
                (0, 2, vec![z(), -&one(), z()]),
            ],
        )
        .expect("so3 table is valid")
    }

    /// The 2-dimensional solvable algebra [e_0, e_1] = e_1.
    pub fn solvable2() -> Self {
        Self::from_brackets(
            2,
            &[(0, 1, vec![GaussianRational::zero(), GaussianRational::one()])],
        )
        .expect("solvable2 table is valid")
    }

    /// Abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> Self {
        LieStructure {
            dim,
            c: vec![GaussianRational::zero(); dim * dim * dim],
        }
    }

    /// Catalog lookup by name, for generators and the command line.
    pub fn by_name(name: &str, dim: usize) -> Option<Self> {
        match name {
            "heisenberg" => Some(Self::heisenberg()),
            "so3" => Some(Self::so3()),
            "solvable2" => Some(Self::solvable2()),
            "abelian" => Some(Self::abelian(dim)),
            _ => None,
        }
    }

    /// Dimensions of the lower central series g_1 = g, g_{k+1} = [g, g_k],
    /// listed until it stabilizes (last entry repeated once if nonzero).
    pub fn lower_central_series(&self) -> Vec<usize> {
        let mut dims = vec![self.dim];
        // Current term spanned by rows of an exact row-reduced matrix.
        let mut span: Vec<Vec<GaussianRational>> = (0..self.dim)
            .map(|i| {
                let mut row = vec![GaussianRational::zero(); self.dim];
                row[i] = GaussianRational::one();
                row
            })
            .collect();
        loop {
            let mut next: Vec<Vec<GaussianRational>> = Vec::new();
            for i in 0..self.dim {
                let mut e_i = vec![GaussianRational::zero(); self.dim];
                e_i[i] = GaussianRational::one();
                for v in &span {
                    next.push(self.bracket_vec(&e_i, v));
                }
            }
            let next = rref(next);
            let ndim = next.len();
            dims.push(ndim);
            if ndim == 0 || ndim == *dims.get(dims.len() - 2).unwrap() {
                break;
            }
            span = next;
        }
        dims
    }

    /// True when the lower central series reaches zero.
    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last() == Some(&0)
    }

    /// Nilpotency class: smallest s with g_{s+1} = 0; None if not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let dims = self.lower_central_series();
        if dims.last() == Some(&0) {
            Some(dims.len() - 1)
        } else {
            None
        }
    }
}

/// Exact row reduction; returns the nonzero rows (a basis of the row span).
fn rref(mut rows: Vec<Vec<GaussianRational>>) -> Vec<Vec<GaussianRational>> {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(src) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let inv = rows[pivot_row][col]
            .inv()
            .expect("pivot is nonzero by selection");
        for v in rows[pivot_row].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..ncols {
                    let delta = &factor * &rows[pivot_row][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

/// Check that a linear map given by generator images (columns of the source
/// basis, expressed in the target basis) intertwines the brackets.
pub fn is_lie_morphism(
    src: &LieStructure,
    dst: &LieStructure,
    images: &[Vec<GaussianRational>],
) -> bool {
    if images.len() != src.dim() || images.iter().any(|v| v.len() != dst.dim()) {
        return false;
    }
    for i in 0..src.dim() {
        for j in (i + 1)..src.dim() {
            // Image of [e_i, e_j] under the map.
            let mut lhs = vec![GaussianRational::zero(); dst.dim()];
            for k in 0..src.dim() {
                let c = src.coeff(i, j, k);
                if c.is_zero() {
                    continue;
                }
                for (l, slot) in lhs.iter_mut().enumerate() {
                    *slot = &*slot + &(c * &images[k][l]);
                }
            }
            let rhs = dst.bracket_vec(&images[i], &images[j]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Exact modulus of a Gaussian rational, if it is rational.
fn rational_modulus(c: &GaussianRational) -> Option<BigRational> {
    crate::weyl::seminorm::rational_sqrt(&c.norm_sqr())
}

/// Weighted l1 norm sum_i w_i |x_i| of a coordinate vector, exact; fails if
/// some modulus is irrational.
pub fn weighted_l1(
    weights: &[BigRational],
    x: &[GaussianRational],
) -> Result<BigRational, GuttError> {
    if weights.len() != x.len() || weights.iter().any(|w| !w.is_positive()) {
        return Err(GuttError::BadWeights);
    }
    let mut acc = BigRational::zero();
    for (w, c) in weights.iter().zip(x) {
        let m = rational_modulus(c).ok_or(GuttError::IrrationalModulus)?;
        acc += w * m;
    }
    Ok(acc)
}

/// Smallest constant C >= 1 with p([x, y]) <= C p(x) p(y) for the weighted
/// l1 norm p: the max over basis pairs of sum_k w_k |c_{ij}^k| / (w_i w_j).
pub fn ae_estimate(
    lie: &LieStructure,
    weights: &[BigRational],
) -> Result<BigRational, GuttError> {
    if weights.len() != lie.dim() || weights.iter().any(|w| !w.is_positive()) {
        return Err(GuttError::BadWeights);
    }
    let mut best = BigRational::one();
    for i in 0..lie.dim() {
        for j in 0..lie.dim() {
            let mut row = BigRational::zero();
            for (k, w) in weights.iter().enumerate() {
                let c = lie.coeff(i, j, k);
                if !c.is_zero() {
                    let m = rational_modulus(c).ok_or(GuttError::IrrationalModulus)?;
                    row += w * m;
                }
            }
            row /= &weights[i] * &weights[j];
            if row > best {
                best = row;
            }
        }
    }
    Ok(best)
}

impl fmt::Display for LieStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieStructure(dim={})", self.dim)
    }
}

#[derive(Serialize, Deserialize)]
struct LieRepr {
    dim: usize,
    brackets: Vec<BracketRepr>,
}

#[derive(Serialize, Deserialize)]
struct BracketRepr {
    i: usize,
    j: usize,
    coeffs: Vec<GaussianRational>,
}

impl Serialize for LieStructure {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut brackets = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let coeffs: Vec<GaussianRational> =
                    (0..self.dim).map(|k| self.coeff(i, j, k).clone()).collect();
                if coeffs.iter().any(|c| !c.is_zero()) {
                    brackets.push(BracketRepr { i, j, coeffs });
                }
            }
        }
        LieRepr {
            dim: self.dim,
            brackets,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LieStructure {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = LieRepr::deserialize(d)?;
        let rows: Vec<(usize, usize, Vec<GaussianRational>)> = repr
            .brackets
            .into_iter()
            .map(|b| (b.i, b.j, b.coeffs))
            .collect();
        LieStructure::from_brackets(repr.dim, &rows).map_err(serde::de::Error::custom)
    }
}
