//! Star product on the symmetric algebra of a Lie algebra.
//!
//! The product transports the universal enveloping multiplication through
//! the symmetrization isomorphism and grades the result by how far each
//! piece drops in degree, which is what the formal parameter counts. The
//! submodules split the work: [`lie`] holds validated structure constants
//! and their seminorm estimates, [`pbw`] the ordered-basis engine and the
//! star product itself, [`bch`] the free-algebra series that governs
//! products of exponentials.

pub mod bch;
pub mod lie;
pub mod pbw;

pub use bch::{
    bch_component_vec, bch_truncated, dynkin_projection, exp_gutt_bch_check, goldberg_rows,
    right_nested_bracket, truncate_by_total_weight, ExpBchReport, FreeAlgElement, GoldbergRow,
    Word, MAX_ORDER,
};
pub use lie::{ae_estimate, is_lie_morphism, weighted_l1, GuttError, LieStructure};
pub use pbw::{counit, poisson_bracket_linear, PbwEngine, UEAElement};
