//! Finite configurations, homothetic copies `a ∔ dF`, syndetic gap
//! certificates and finite-sums prefixes.

mod copies;
mod fs;
mod syndetic;
mod window;

pub(crate) use copies::anchor_box;
pub use copies::{enumerate_copies, realize_copy, ConfigSet, HomotheticCopy, LatticeCopy};
pub use fs::{fs_prefix, FsPrefix};
pub use syndetic::{
    check_syndetic, check_syndetic_finite, min_gap_certificate, periodic_gap_certificate, smallest_syndetic_set_finite,
    FiniteSyndeticCertificate, SyndeticCertificate,
};
pub use window::{ScalarRange, Window};
