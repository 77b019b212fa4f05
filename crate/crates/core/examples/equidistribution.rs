//! Time averages of test functions along polynomial orbits on the circle.
//!
//! ```bash
//! cargo run --release --example equidistribution
//! ```

use semiramsey::dynamics::{poly_equidistribution, TestFn};

fn main() {
    let sqrt2 = std::f64::consts::SQRT_2;
    let cases: [(&str, Vec<f64>); 3] =
        [("sqrt2 x", vec![0.0, sqrt2]), ("sqrt2 x^2 + x", vec![0.0, 1.0, sqrt2]), ("x / 2", vec![0.0, 0.5])];
    for (name, coeffs) in cases {
        for f in ["cos:1", "bump:0.5:0.2"] {
            let r = poly_equidistribution(&coeffs, &TestFn::parse(f).unwrap(), 1e5, 1.0).unwrap();
            println!(
                "{name:<14} {f:<14} time {:+.6}  space {:+.6}  discrepancy {:.2e}",
                r.time_average, r.space_average, r.discrepancy
            );
        }
    }
}
