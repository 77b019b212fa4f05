//! Minimal sets, uniform recurrence and multiple hitting-time sets of a finite
//! system.
//!
//! ```bash
//! cargo run --example hitting_times
//! ```

use semiramsey::dynamics::{cover_recurrence, hitting_time_set, minimal_sets, rotation, uniform_recurrence, FiniteTds};

fn main() {
    let rot6 = FiniteTds::new(6, vec![rotation(6, 1)]).unwrap();
    let n = hitting_time_set(&rot6, &[0, 1], &[vec![1], vec![2]], (0, 20), false).unwrap();
    println!("rotation of Z/6, U = {{0,1}}, T = (1, 2)");
    println!("  N = {:?}", n.n);
    println!("  period {:?}, syndetic {}, witnesses ok {}", n.period, n.is_syndetic(), n.verify_witnesses(&rot6).unwrap());

    // a transient tail 0 -> 1 -> 2 feeding the 3-cycle {2, 3, 4}
    let tail = FiniteTds::new(5, vec![vec![1, 2, 3, 4, 2]]).unwrap();
    let m = minimal_sets(&tail);
    println!("tail into a cycle: minimal sets {:?}", m.minimal_sets);
    for x in [0, 3] {
        let r = uniform_recurrence(&tail, x, None).unwrap();
        println!("  x = {x}: recurrent {}, return times {:?}", r.recurrent, r.return_times);
    }
    let transient = hitting_time_set(&tail, &[0, 1], &[vec![1]], (0, 20), false).unwrap();
    println!("  U = {{0,1}} misses the minimal set: N = {:?}, regime {:?}", transient.n, transient.regime);

    // two commuting rotations of Z/12
    let two = FiniteTds::new(12, vec![rotation(12, 3), rotation(12, 4)]).unwrap();
    let cover = vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7], vec![8, 9, 10, 11]];
    let r = cover_recurrence(&two, &cover, &[vec![1, 0], vec![0, 1], vec![1, 1]], (0, 24)).unwrap();
    println!("Z/12 with +3, +4: cover member {} gives N = {:?}", r.chosen, r.hitting.n);
}
