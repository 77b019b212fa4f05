//! Differential testing of the optimized searches against the naive oracles.
//!
//! ```bash
//! cargo run --release --example oracle_diff
//! cargo run --release --example oracle_diff -- 7 100
//! ```

use semiramsey::oracle::{cross_check, Suite};

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let seed = args.first().copied().unwrap_or(1);
    let count = args.get(1).copied().unwrap_or(50) as usize;
    for suite in [Suite::Mono, Suite::Diffset, Suite::Hitting, Suite::Grunwald] {
        match cross_check(suite, seed, count) {
            Ok(reports) => println!("{suite:?}: {} instances agree", reports.len()),
            Err(e) => println!("{suite:?}: {e}"),
        }
    }
}
