//! Axiom validation and the nil-set covering condition on small tabulated
//! semirings.
//!
//! ```bash
//! cargo run --example semiring_axioms
//! ```

use semiramsey::algebra::{check_star_condition, nil_set, validate_semiring, FiniteSemiring};

fn main() {
    let boolean = FiniteSemiring::boolean();
    let z4 = FiniteSemiring::zmod(4);

    for (name, ring) in [("boolean", &boolean), ("Z/4", &z4)] {
        let report = validate_semiring(ring);
        println!("{name:<8} valid {} ({} instances)", report.valid, report.instances_checked);
        for s in 0..ring.size() {
            println!("  nil({s}) = {:?}", nil_set(ring, s).unwrap());
        }
        for k in 1..=ring.size().min(3) {
            let star = check_star_condition(ring, k, 1_000_000).unwrap();
            println!("  k = {k}: no {k} nil sets cover R: {}  cover {:?}", star.holds, star.witness);
        }
    }

    // max-plus style table on {0, 1, 2}: addition is max, multiplication is min
    let add: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| a.max(b)).collect()).collect();
    let mul: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| a.min(b)).collect()).collect();
    let chain = FiniteSemiring::from_tables(add.clone(), mul, Some(0), Some(2)).unwrap();
    println!("chain    valid {}", validate_semiring(&chain).valid);

    // break the unit law by editing one product
    let mut mul = chain.mul_table().to_vec();
    mul[1][2] = 0;
    let broken = FiniteSemiring::from_tables(add, mul, Some(0), Some(2)).unwrap();
    let report = validate_semiring(&broken);
    for v in &report.violations {
        println!("broken   violates {} at {:?}", v.axiom, v.witness);
    }
}
