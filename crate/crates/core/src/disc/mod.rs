//! Star product on the generalized Poincare disc.
//!
//! The disc D_n is the quotient of the quadric
//! Z = { -|z^0|^2 + sum_{k=1}^n |z^k|^2 = 1 } in C^{n+1} by the phase
//! action z -> e^{i theta} z. Phase-invariant polynomials upstairs carry
//! the normal-ordered star product of the indefinite metric
//! diag(-1, 1, ..., 1); restriction to Z pushes it down to a reduced
//! product on basis functions f[P|Q] whose coefficients are rational in
//! the deformation parameter, with poles confined to -1/(2m).
//!
//! Submodules: [`cn`] for polynomials upstairs, [`element`] for the
//! reduced basis, [`restrict`] for the two restriction maps, [`star`] for
//! the reduced product and its classical limits, [`geometry`] for numeric
//! evaluation at points of Z and in the chart, [`cauchy`] for contour
//! recovery of coefficients, [`norms`] for weighted coefficient norms.

use thiserror::Error;

use crate::scalar::ArithmeticError;

pub mod cauchy;
pub mod cn;
pub mod element;
pub mod geometry;
pub mod norms;
pub mod restrict;
pub mod star;

pub use cauchy::{cauchy_coefficient, CauchyOptions, CauchyValue, ContourNum};
pub use cn::{metric_function, metric_minus_one, wick_star, CnPolynomial};
pub use element::{DiscElement, DiscIndex};
pub use geometry::{
    chart_coordinates, eval_cn, eval_disc, eval_lifted_monomial,
    eval_quantum_restriction_direct, fhat_eval, fhat_eval_element, sample_z_point, ZPoint,
};
pub use norms::{norm_cn, norm_disc};
pub use restrict::{
    classical_restriction, kernel_membership, morphism_check, quantum_factor,
    quantum_restriction, MorphismReport,
};
pub use star::{
    classical_product, pole_report, reduced_poisson_bracket, reduced_star, semiclassical_limit,
    PoleReportRow, ReducedStarEngine, SemiclassicalLimit,
};

/// Failures specific to the disc algebra.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DiscError {
    #[error("dimension mismatch in {context}: {left} vs {right}")]
    DimensionMismatch {
        left: usize,
        right: usize,
        context: &'static str,
    },
    #[error("polynomial is not invariant under the common phase rotation")]
    NotInvariant,
    #[error("monomial with matched 0-th powers has no direct per-term value")]
    NotCanonical,
    #[error("coefficient has a pole at the evaluation point")]
    PoleAtPoint,
    #[error("division by zero in coefficient arithmetic")]
    DivisionByZero,
    #[error("chart evaluation where u.v = 1")]
    ChartSingularity,
    #[error("contour sum did not settle after {doublings} grid doublings")]
    NoConvergence { doublings: u32 },
    #[error("coefficient has a pole or an unexpected nonzero value at parameter 0")]
    UnexpectedPoleAtZero,
    #[error("pole outside the family -1/(2m): {pole} in {left} (star) {right}")]
    ForeignPole {
        pole: String,
        left: String,
        right: String,
    },
}

impl From<ArithmeticError> for DiscError {
    fn from(e: ArithmeticError) -> Self {
        match e {
            ArithmeticError::PoleAtPoint => DiscError::PoleAtPoint,
            ArithmeticError::DivisionByZero => DiscError::DivisionByZero,
        }
    }
}
