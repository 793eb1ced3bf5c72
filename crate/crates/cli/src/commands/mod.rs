//! One module per command family; the value enums shared with the argument
//! parser live here.

pub mod experiments;
pub mod products;
pub mod reduction;
pub mod series;

use clap::ValueEnum;

/// Which of the three products a command should exercise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StarKind {
    /// Constant coefficient matrix on polynomial elements.
    Weyl,
    /// Linear structure through the symmetrization map.
    Gutt,
    /// Reduced normal-ordered product on the disc.
    Disc,
}

impl StarKind {
    pub fn name(self) -> &'static str {
        match self {
            StarKind::Weyl => "weyl",
            StarKind::Gutt => "gutt",
            StarKind::Disc => "disc",
        }
    }
}

/// Which convergence demonstration to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DemoKind {
    /// Truncated exponentials under the constant symplectic product.
    Weyl,
    /// Seminorm ratios for powers of the two noncentral Heisenberg
    /// generators.
    Gutt,
}

/// Floating-point width for the contour integration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Precision {
    /// Hardware f64 arithmetic.
    Double,
    /// Double-double compensated arithmetic.
    Extended,
}

/// What `generate` should produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// Random polynomial element in --dim variables.
    SymElement,
    /// Catalog Lie structure chosen by --name.
    LieStructure,
    /// Random invariant polynomial upstairs (matching degrees per term).
    CnInvariant,
    /// Random reduced element on the disc.
    DiscElement,
}
