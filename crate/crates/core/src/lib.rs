//! Exact-arithmetic workbench for convergent star products.
//!
//! Three families of deformed products are implemented side by side:
//!
//! * [`weyl`]: star products on Sym(V) built from a constant bilinear form,
//!   together with the weighted seminorm family used to discuss convergence.
//! * [`gutt`]: the star product on polynomials on the dual of a Lie algebra,
//!   realized through the symmetrization map into the universal enveloping
//!   algebra, plus Baker-Campbell-Hausdorff machinery in the free algebra.
//! * [`disc`]: a Wick-type star product on a complex hyperbolic disc,
//!   obtained by reducing a larger Wick product to the invariant functions
//!   on a level-set quadric, with numeric cross-checks on actual points.
//!
//! All coefficient arithmetic is exact: scalars are rational functions of a
//! formal deformation parameter with Gaussian-rational coefficients, so
//! algebraic identities are verified literally rather than to a tolerance.
//! Floating point enters only where a value genuinely lives off the rational
//! world (square-root seminorm values, evaluation at sample points, contour
//! integrals), and those paths say so in their types.

pub mod disc;
pub mod gutt;
pub mod multiindex;
pub mod numeric;
pub mod rng;
pub mod scalar;
pub mod weyl;
