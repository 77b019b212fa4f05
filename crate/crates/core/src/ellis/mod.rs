//! Enveloping semigroups of finite systems.
//!
//! For a finite state space `X` the product topology on `X^X` is discrete,
//! so the pointwise closure of a family of maps adds nothing: the enveloping
//! semigroup is exactly the set of finite compositions of the generators.
//! Everything here is therefore plain composition closure.

mod ideals;
mod product;
mod semigroup;

pub use ideals::{ideal_analysis, IdealReport};
pub use product::{verify_lemma21, CommuteFailure, ProductReport, ProductSystem, MAX_PRODUCT_STATES};
pub use semigroup::{generate_semigroup, TransformationSemigroup, DEFAULT_SEMIGROUP_BUDGET};
