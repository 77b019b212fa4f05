//! A group extension of a rotation and the lift of uniform recurrence to the
//! fibres.
//!
//! ```bash
//! cargo run --example skew_product
//! ```

use semiramsey::dynamics::{build_skew_product, minimal_sets, rotation, verify_uniform_recurrence_lift, Cocycle, FiniteGroup, FiniteTds};

fn main() {
    let base = FiniteTds::new(3, vec![rotation(3, 1)]).unwrap();
    for (name, group) in [("Z/2", FiniteGroup::cyclic(2)), ("Klein", FiniteGroup::klein())] {
        // twist by a nontrivial element only when leaving state 2
        let cocycle = Cocycle::OnGenerators(vec![vec![0, 0, 1]]);
        let skew = build_skew_product(&base, &group, &cocycle).unwrap();
        let report = verify_uniform_recurrence_lift(&skew, 0).unwrap();
        let m = minimal_sets(&skew.product);
        println!(
            "{name:<6} product has {} states, {} minimal sets, fibres recurrent {}, automorphisms commute {}",
            skew.product.states(),
            m.minimal_sets.len(),
            report.all_recurrent,
            report.automorphisms_commute
        );
        for p in &report.fibers {
            println!("  (x0, k = {}) -> state {} recurrent {}", p.k, p.state, p.recurrent);
        }
    }
}
