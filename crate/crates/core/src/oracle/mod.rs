//! Naive reference implementations and the differential-testing harness.
//!
//! The naive side is written for obviousness: full enumeration, direct map
//! application, no shared helpers with the optimized engine beyond the
//! domain types. `cross_check` pairs the two on seeded instances and
//! reports any mismatch with the full instance, so it can be replayed.

mod diff;
pub mod instances;
mod naive;

pub use diff::{cross_check, cross_check_with, replay, run_naive, run_optimized, suite_instances, DiffReport, Instance, Suite};
pub use naive::{naive_copy_count, naive_diffset, naive_grunwald, naive_hitting, naive_mono, ORACLE_BUDGET};
