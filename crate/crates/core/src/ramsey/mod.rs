//! Colorings and the partition-theorem searches: monochromatic copies,
//! difference sets `D_F`, Grünwald numbers, vdW-set checks, diameter search
//! and the Schur–Brauer explorer.
//!
//! Copies are always visited in `(d, a)` lexicographic order, so every
//! search reports the same witness on every platform and thread count.

mod coloring;
mod explore;
mod grunwald;
mod mono;

pub use coloring::Coloring;
pub use explore::{exhaustive_partition_check, schur_brauer_search, PartitionEntry, PartitionReport, SchurBrauerWitness};
pub use grunwald::{grunwald_number, GrunwaldOptions, GrunwaldResult, GrunwaldStats, DEFAULT_BUDGET};
pub use mono::{
    diameter_search, diff_set, find_mono_copy, verify_vdw_set, DiameterHit, DiffSet, MonoWitness, VdwEntry, VdwReport,
    DEFAULT_SYNDETIC_RATIO,
};
