//! Exact Grünwald numbers for small `q` and `F`, with the extremal colorings.
//!
//! ```bash
//! cargo run --release --example grunwald_numbers
//! cargo run --release --example grunwald_numbers -- 3 0,1,2
//! ```

use semiramsey::configs::ConfigSet;
use semiramsey::ramsey::{grunwald_number, GrunwaldOptions};
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cases: Vec<(u8, Vec<u64>)> = match args.as_slice() {
        [q, f] => vec![(q.parse().expect("q"), f.split(',').map(|x| x.parse().expect("F")).collect())],
        _ => vec![(1, vec![0, 1]), (2, vec![0, 1]), (2, vec![0, 1, 2]), (2, vec![0, 1, 3]), (2, vec![0, 1, 2, 3])],
    };

    for (q, f) in cases {
        let config = ConfigSet::ints(&f).unwrap();
        let start = Instant::now();
        let r = grunwald_number(q, &config, &GrunwaldOptions::default()).unwrap();
        let extremal = r.extremal.as_ref().and_then(|c| c.digits()).unwrap_or_default();
        println!(
            "N({q}, {f:?}) = {:<3} extremal {extremal:<40} nodes {:>10}  {:?}",
            r.n,
            r.stats.nodes,
            start.elapsed()
        );
        assert!(r.verify());
    }
}
