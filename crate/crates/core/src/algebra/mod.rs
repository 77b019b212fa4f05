//! Semirings, semimodules and their axioms.
//!
//! Two kinds of structure are supported. Finite ones are fully tabulated and
//! addressed by element index. Windowed ones model `Z+` and `Z+^n` inside a
//! bound `W`; any result that would leave the window is reported as
//! [`Error::Overflow`](crate::Error::Overflow) instead of being clamped.

mod file;
mod semimodule;
mod semiring;
mod star;
mod validate;
mod windowed;

pub use file::{SemimoduleFile, SemiringFile, Structure, StructureFile};
pub use semimodule::{FiniteSemimodule, Side};
pub use semiring::FiniteSemiring;
pub use star::{check_star_condition, check_star_condition_windowed, nil_set, nil_set_windowed, StarResult};
pub use validate::{
    validate_semimodule, validate_semiring, validate_windowed_module, validate_windowed_semiring,
    Axiom, ModuleAxiom, ModuleWitness, ValidationReport, Violation,
};
pub use windowed::{LatticeModule, NatVecWindow, NatWindow, WindowedSemiring};

use crate::Result;
use std::fmt::Debug;

/// A semiring `(R, +, ·)` with zero and unit.
pub trait Semiring {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn contains(&self, a: &Self::Elem) -> bool;
}

/// A (left, unless the implementation says otherwise) semimodule `(G, ∔)`
/// with scalar action `R × G → G`.
pub trait Semimodule {
    type Scalar: Clone + PartialEq + Debug;
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn add(&self, g: &Self::Elem, h: &Self::Elem) -> Result<Self::Elem>;
    /// `r·g` for a left semimodule, `g·r` for a right one.
    fn act(&self, r: &Self::Scalar, g: &Self::Elem) -> Result<Self::Elem>;
    fn contains(&self, g: &Self::Elem) -> bool;
}
