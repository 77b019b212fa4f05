//! Enveloping semigroups of finite systems, their minimal left ideals and
//! idempotents, and minimality of the product system along a list of times.
//!
//! ```bash
//! cargo run --example enveloping_semigroup
//! ```

use semiramsey::dynamics::{rotation, FiniteTds};
use semiramsey::ellis::{generate_semigroup, ideal_analysis, verify_lemma21, DEFAULT_SEMIGROUP_BUDGET};

fn main() {
    let systems = [
        ("rotation Z/5", 5, vec![rotation(5, 1)]),
        ("+2, +3 on Z/6", 6, vec![rotation(6, 2), rotation(6, 3)]),
        ("tail into 2-cycle", 4, vec![vec![1, 2, 3, 2]]),
    ];
    for (name, states, gens) in systems {
        let s = generate_semigroup(states, &gens, DEFAULT_SEMIGROUP_BUDGET).unwrap();
        let ideals = ideal_analysis(&s);
        println!(
            "{name}: |E| = {} (identity adjoined {}), {} minimal left ideals, {} idempotents, {} minimal",
            s.len(),
            s.identity_adjoined,
            ideals.minimal_left_ideals.len(),
            ideals.idempotents.len(),
            ideals.minimal_idempotents.len()
        );
    }

    let z4 = FiniteTds::new(4, vec![rotation(4, 1)]).unwrap();
    for t_list in [vec![vec![1], vec![3]], vec![vec![1], vec![2], vec![3]]] {
        let lambda: Vec<Vec<usize>> = (0..4).map(|x| vec![x; t_list.len()]).collect();
        let r = verify_lemma21(&z4, &t_list, &lambda, (0, 16)).unwrap();
        println!(
            "Z/4 with T = {:?}: |Sigma| = {}, contains diagonal {}, minimal {}",
            t_list.iter().map(|g| g[0]).collect::<Vec<_>>(),
            r.sigma.len(),
            r.contains_lambda,
            r.minimal
        );
    }
}
