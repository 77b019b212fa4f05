//! The orbit closure of a coloring in the shift space, its minimal class, and
//! the weak central certificate for the color it picks.
//!
//! ```bash
//! cargo run --example weak_central
//! ```

use semiramsey::dynamics::{furstenberg_subshift, piecewise_syndetic_check, verify_weak_central};
use semiramsey::ramsey::Coloring;

fn main() {
    let colorings = [
        ("period 3", Coloring::from_fn(0, 59, 2, |n| if n % 3 == 0 { 2 } else { 1 }).unwrap()),
        ("defect then alternating", Coloring::from_fn(0, 59, 2, |n| if n < 5 { 2 } else { 1 + (n % 2) as u8 }).unwrap()),
    ];
    for (name, c) in colorings {
        let (approx, cert) = furstenberg_subshift(&c, &[0, 1, 2], true).unwrap();
        println!(
            "{name}: {} patterns, minimal class {:?}, j = {}, eta = {:?} at {}",
            approx.nodes.len(),
            approx.minimal_class,
            cert.j,
            cert.eta,
            cert.eta_position
        );
        println!("  |S| = {}, verified {}", cert.s.len(), verify_weak_central(&c, &approx, &cert));
        let p = piecewise_syndetic_check(&cert.s, (0, 59), 2, 30).unwrap();
        println!("  piecewise syndetic (gap 2, run 30): {} {:?}", p.holds, p.witness);
    }
}
