//! Finite dynamical systems with semimodule time.
//!
//! States are `0..n`; every subset of a finite space is open, so "open set"
//! below simply means a set of states. Powers of a map on a finite set are
//! eventually periodic, which is what turns statements about all `t ∈ Z+`
//! into finite checks.

mod equidist;
mod hitting;
pub mod maps;
mod minimal;
mod piecewise;
mod skew;
mod subshift;
mod tds;

pub use equidist::{poly_equidistribution, EquidistReport, TestFn, MAX_STEP};
pub use hitting::{cover_recurrence, hitting_time_set, uniform_recurrence, CoverReport, GapCertificate, HittingSet, RecurrenceReport, Regime};
pub use maps::Map;
pub use minimal::{minimal_sets, minimal_sets_of, orbit_of, MinimalSetReport};
pub use piecewise::{piecewise_syndetic_check, PiecewiseReport};
pub use skew::{
    build_skew_product, verify_uniform_recurrence_lift, Cocycle, CocycleFile, FiberPoint, FiniteGroup, GroupFile, LiftReport, SkewFile, SkewProduct,
};
pub use subshift::{furstenberg_subshift, verify_weak_central, SubshiftApprox, WeakCentralCertificate};
pub use tds::{rotation, FiniteTds, TdsFile, Time, TimeFile, DEFAULT_TIME_BOUND};
