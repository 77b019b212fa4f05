//! Time averages of `f(frac(p(x)))` over `[0, T]` against the circle average
//! of `f`.
//!
//! The polynomial is evaluated in double-double arithmetic for long horizons
//! so that `frac(p(x))` keeps full precision even when `p(x)` is around
//! `10^12`.

use crate::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// Test functions on the circle `R/Z`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TestFn {
    Const { c: f64 },
    /// `cos(2π k θ)`
    Cos { k: u32 },
    /// `sin(2π k θ)`
    Sin { k: u32 },
    /// `a0 + Σ cos[n]·cos(2π(n+1)θ) + Σ sin[n]·sin(2π(n+1)θ)`
    TrigPoly { a0: f64, cos: Vec<f64>, sin: Vec<f64> },
    /// Raised-cosine bump of the given width centred at `center`.
    SmoothBump { center: f64, width: f64 },
}

impl TestFn {
    /// `const:c`, `cos:k`, `sin:k`, `bump:center:width` or
    /// `trig:a0:c1,c2,..:s1,s2,..`.
    pub fn parse(s: &str) -> Result<Self> {
        let num = |x: &str| x.trim().parse::<f64>().map_err(|e| Error::invalid(format!("bad number {x:?}: {e}")));
        let int = |x: &str| x.trim().parse::<u32>().map_err(|e| Error::invalid(format!("bad frequency {x:?}: {e}")));
        let list = |x: &str| x.split(',').filter(|v| !v.trim().is_empty()).map(num).collect::<Result<Vec<_>>>();
        let parts: Vec<&str> = s.split(':').collect();
        let f = match parts.as_slice() {
            ["const", c] => TestFn::Const { c: num(c)? },
            ["cos", k] => TestFn::Cos { k: int(k)? },
            ["sin", k] => TestFn::Sin { k: int(k)? },
            ["bump", c, w] => TestFn::SmoothBump { center: num(c)?, width: num(w)? },
            ["trig", a0, c, s] => TestFn::TrigPoly { a0: num(a0)?, cos: list(c)?, sin: list(s)? },
            _ => return Err(Error::invalid(format!("unknown test function {s:?}"))),
        };
        if let TestFn::SmoothBump { width, .. } = f {
            if !(width > 0.0 && width <= 1.0) {
                return Err(Error::invalid("bump width must lie in (0, 1]"));
            }
        }
        Ok(f)
    }

    pub fn eval(&self, theta: f64) -> f64 {
        match self {
            TestFn::Const { c } => *c,
            TestFn::Cos { k } => (TAU * *k as f64 * theta).cos(),
            TestFn::Sin { k } => (TAU * *k as f64 * theta).sin(),
            TestFn::TrigPoly { a0, cos, sin } => {
                let c: f64 = cos.iter().enumerate().map(|(n, a)| a * (TAU * (n + 1) as f64 * theta).cos()).sum();
                let s: f64 = sin.iter().enumerate().map(|(n, b)| b * (TAU * (n + 1) as f64 * theta).sin()).sum();
                a0 + c + s
            }
            TestFn::SmoothBump { center, width } => {
                let mut d = (theta - center).rem_euclid(1.0);
                if d > 0.5 {
                    d -= 1.0;
                }
                if d.abs() <= width / 2.0 {
                    0.5 * (1.0 + (TAU * d / width).cos())
                } else {
                    0.0
                }
            }
        }
    }

    /// `∫_0^1 f(θ) dθ`, in closed form.
    pub fn space_average(&self) -> f64 {
        match self {
            TestFn::Const { c } => *c,
            TestFn::Cos { k } => (*k == 0) as u8 as f64,
            TestFn::Sin { .. } => 0.0,
            TestFn::TrigPoly { a0, .. } => *a0,
            TestFn::SmoothBump { width, .. } => width / 2.0,
        }
    }
}

/// Double-double number `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Dd {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    Dd { hi: s, lo: (a - (s - bb)) + (b - bb) }
}

fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd { hi: s, lo: b - (s - a) }
}

impl Dd {
    fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    fn add(self, o: Dd) -> Dd {
        let s = two_sum(self.hi, o.hi);
        quick_two_sum(s.hi, s.lo + self.lo + o.lo)
    }

    fn mul(self, o: Dd) -> Dd {
        let p = self.hi * o.hi;
        let e = self.hi.mul_add(o.hi, -p);
        quick_two_sum(p, e + self.hi * o.lo + self.lo * o.hi)
    }

    /// Fractional part in `[0, 1)`.
    fn frac(self) -> f64 {
        let f = self.hi - self.hi.floor();
        let r = f + self.lo;
        r - r.floor()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquidistReport {
    /// `a_0, a_1, …, a_d`.
    pub coeffs: Vec<f64>,
    pub f: TestFn,
    pub horizon: f64,
    pub step: f64,
    pub samples: u64,
    pub double_double: bool,
    pub time_average: f64,
    pub space_average: f64,
    pub discrepancy: f64,
}

pub const MAX_STEP: f64 = 1e-2;
const DD_HORIZON: f64 = 1e5;
const CHUNK: u64 = 1 << 16;

/// Composite midpoint rule for `(1/T) ∫_0^T f(frac(p(x))) dx` with
/// `p(x) = Σ coeffs[i] x^i`. The step is the largest `T/n` not above `step`
/// (itself capped at `1e-2`). Chunk sums are combined in a fixed order, so
/// the result does not depend on the thread count.
pub fn poly_equidistribution(coeffs: &[f64], f: &TestFn, horizon: f64, step: f64) -> Result<EquidistReport> {
    match coeffs.last() {
        Some(&a) if coeffs.len() >= 2 && a != 0.0 && a.is_finite() => {}
        _ => return Err(Error::DegenerateLeadingCoefficient),
    }
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::invalid("coefficients must be finite"));
    }
    if !(horizon > 0.0 && horizon.is_finite()) || step.is_nan() || step <= 0.0 {
        return Err(Error::invalid("horizon and step must be positive"));
    }
    let samples = (horizon / step.min(MAX_STEP)).ceil() as u64;
    let h = horizon / samples as f64;
    let double_double = horizon >= DD_HORIZON;
    let eval = |i: u64| -> f64 {
        let xm = i as f64 + 0.5;
        let theta = if double_double {
            let x = Dd { hi: xm * h, lo: xm.mul_add(h, -(xm * h)) };
            coeffs.iter().rev().fold(Dd::from(0.0), |acc, &a| acc.mul(x).add(Dd::from(a))).frac()
        } else {
            let x = xm * h;
            let v = coeffs.iter().rev().fold(0.0, |acc, &a| acc * x + a);
            v - v.floor()
        };
        f.eval(theta)
    };
    let chunks = samples.div_ceil(CHUNK);
    let partial: Vec<f64> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let (mut sum, mut comp) = (0.0f64, 0.0f64);
            for i in c * CHUNK..((c + 1) * CHUNK).min(samples) {
                let y = eval(i) - comp;
                let t = sum + y;
                comp = (t - sum) - y;
                sum = t;
            }
            sum
        })
        .collect();
    let total = partial.iter().fold(Dd::from(0.0), |acc, &s| acc.add(Dd::from(s)));
    let time_average = (total.hi + total.lo) / samples as f64;
    let space_average = f.space_average();
    Ok(EquidistReport {
        coeffs: coeffs.to_vec(),
        f: f.clone(),
        horizon,
        step: h,
        samples,
        double_double,
        time_average,
        space_average,
        discrepancy: (time_average - space_average).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_function() {
        let r = poly_equidistribution(&[0.0, 1.0], &TestFn::Const { c: 1.0 }, 50.0, 1e-2).unwrap();
        assert!((r.time_average - 1.0).abs() < 1e-12);
        assert!(r.discrepancy < 1e-12);
    }

    #[test]
    fn degenerate_polynomials() {
        let f = TestFn::Cos { k: 1 };
        assert!(matches!(poly_equidistribution(&[1.0, 0.0], &f, 10.0, 1e-2), Err(Error::DegenerateLeadingCoefficient)));
        assert!(matches!(poly_equidistribution(&[3.0], &f, 10.0, 1e-2), Err(Error::DegenerateLeadingCoefficient)));
    }

    #[test]
    fn integer_slope_is_exact() {
        // frac(x) sweeps the circle once per unit, so the midpoint rule is exact
        let r = poly_equidistribution(&[0.0, 1.0], &TestFn::Cos { k: 1 }, 20.0, 1e-2).unwrap();
        assert!(r.time_average.abs() < 1e-9);
    }

    #[test]
    fn irrational_slope_short_horizon() {
        let r = poly_equidistribution(&[0.0, 2f64.sqrt()], &TestFn::Cos { k: 1 }, 1000.0, 1e-2).unwrap();
        assert!(r.discrepancy < 1e-3);
    }

    #[test]
    fn double_double_frac_keeps_precision() {
        // (2^40 + 0.25) is exact in f64; squaring it loses the fraction in f64
        let x = Dd::from(1099511627776.25);
        assert_eq!(x.mul(x).frac(), 0.0625);
        let big = Dd { hi: 1e12, lo: 0.3 };
        assert!((big.frac() - 0.3).abs() < 1e-15);
    }

    #[test]
    fn bump_average_matches_quadrature() {
        let f = TestFn::parse("bump:0.3:0.4").unwrap();
        let n = 100_000;
        let q: f64 = (0..n).map(|i| f.eval((i as f64 + 0.5) / n as f64)).sum::<f64>() / n as f64;
        assert!((q - f.space_average()).abs() < 1e-9);
        let t = TestFn::parse("trig:0.5:1,2:3").unwrap();
        assert_eq!(t.space_average(), 0.5);
    }
}
