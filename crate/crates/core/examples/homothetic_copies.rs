//! Homothetic copies `a + dF` in a window and syndetic gap certificates.
//!
//! ```bash
//! cargo run --example homothetic_copies
//! ```

use semiramsey::configs::{check_syndetic, enumerate_copies, min_gap_certificate, ConfigSet, ScalarRange, Window};

fn main() {
    let f = ConfigSet::ints(&[0, 1, 2]).unwrap();
    let window = Window::interval(0, 10);
    let d_range = ScalarRange::new(1, 5).unwrap();
    let copies: Vec<_> = enumerate_copies(&f, &window, d_range, false).collect();
    println!("{} copies of {{0,1,2}} in [0,10]", copies.len());
    for c in copies.iter().take(5) {
        println!("  a = {:?}, d = {} -> {:?}", c.a, c.d, c.realized);
    }

    let corner = ConfigSet::points(vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
    let square = Window::cube(2, 4);
    let n = enumerate_copies(&corner, &square, ScalarRange::new(1, 4).unwrap(), false).count();
    println!("{n} corners in the 5x5 grid");

    let multiples: Vec<u64> = (0..=100).filter(|n| n % 7 == 0).collect();
    let cert = min_gap_certificate(&multiples, (0, 100)).unwrap();
    println!("multiples of 7: K = {:?}, verified {}", cert.k, cert.verified);

    let too_small = check_syndetic(&multiples, (0, 100), &[0, 1, 2, 3]).unwrap();
    println!("K = 0..=3 fails at t = {:?}", too_small.failing_t);
}
