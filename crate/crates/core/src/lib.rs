//! Ramsey-type computations on semimodules over semirings.
//!
//! The crate is organised around the objects the partition theorems talk about:
//!
//! * [`algebra`]: finite and windowed semirings/semimodules, axiom validation and
//!   the nil-set covering condition.
//! * [`configs`]: finite configurations `F`, homothetic copies `a + dF`, syndetic
//!   gap certificates and finite-sums prefixes.
//! * [`ramsey`]: colorings, monochromatic copy search, difference sets,
//!   Grünwald numbers `N(q, F)` and related searches.
//! * [`dynamics`]: finite dynamical systems with semimodule time, minimal sets,
//!   multiple hitting-time sets, group extensions, symbolic subshifts and the
//!   polynomial equidistribution check.
//! * [`ellis`]: enveloping semigroups of finite systems, minimal left ideals and
//!   the product-system minimality check.
//! * [`oracle`]: naive reference implementations used for differential testing.
//! * [`cli`]: the command-line front end used by the `semiramsey` binary.
//!
//! Every positive claim is backed by a certificate that can be re-checked from
//! its own contents.

pub mod algebra;
pub mod cli;
pub mod configs;
pub mod dynamics;
pub mod ellis;
mod error;
pub mod oracle;
pub mod ramsey;
pub(crate) mod util;

pub use error::{Error, Result};
