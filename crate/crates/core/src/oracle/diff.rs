use super::instances::*;
use super::naive::{naive_diffset, naive_grunwald, naive_hitting, naive_mono};
use crate::configs::{ConfigSet, ScalarRange};
use crate::dynamics::{hitting_time_set, TdsFile};
use crate::ramsey::{diff_set, find_mono_copy, grunwald_number, Coloring, GrunwaldOptions};
use crate::{Error, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// One self-contained problem, enough to rerun both implementations.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "operation", rename_all = "snake_case")]
pub enum Instance {
    Mono {
        coloring: Coloring,
        #[serde(rename = "F")]
        f: ConfigSet<Vec<u64>>,
        d_range: ScalarRange,
        allow_zero_d: bool,
    },
    Diffset {
        coloring: Coloring,
        #[serde(rename = "F")]
        f: ConfigSet<Vec<u64>>,
        color: u8,
        d_range: ScalarRange,
        allow_zero_d: bool,
    },
    Hitting {
        tds: TdsFile,
        #[serde(rename = "U")]
        u: Vec<usize>,
        #[serde(rename = "T")]
        t_list: Vec<Vec<u64>>,
        window: (u64, u64),
    },
    Grunwald {
        q: u8,
        #[serde(rename = "F")]
        f: ConfigSet<Vec<u64>>,
        n_max: u64,
    },
}

impl Instance {
    pub fn operation(&self) -> &'static str {
        match self {
            Instance::Mono { .. } => "mono",
            Instance::Diffset { .. } => "diffset",
            Instance::Hitting { .. } => "hitting",
            Instance::Grunwald { .. } => "grunwald",
        }
    }
}

/// Both results in canonical form:
/// * mono: `null` or `{"color", "a", "d"}` for the first copy in `(d, a)` order;
/// * diffset: `[[d, a], …]` sorted by `d`;
/// * hitting: sorted list of times;
/// * grunwald: `N`, or `null` when `N > n_max`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiffReport {
    pub operation: String,
    pub instance: Value,
    pub optimized: Value,
    pub naive: Value,
    pub agree: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Mono,
    Diffset,
    Hitting,
    Grunwald,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mono" => Ok(Suite::Mono),
            "diffset" => Ok(Suite::Diffset),
            "hitting" => Ok(Suite::Hitting),
            "grunwald" => Ok(Suite::Grunwald),
            _ => Err(Error::invalid(format!("unknown suite {s:?} (mono, diffset, hitting, grunwald)"))),
        }
    }
}

pub fn run_optimized(inst: &Instance) -> Result<Value> {
    Ok(match inst {
        Instance::Mono { coloring, f, d_range, allow_zero_d } => match find_mono_copy(coloring, f, *d_range, *allow_zero_d) {
            Some(w) => json!({"color": w.color, "a": w.copy.a, "d": w.copy.d}),
            None => Value::Null,
        },
        Instance::Diffset { coloring, f, color, d_range, allow_zero_d } => {
            let ds = diff_set(coloring, f, *color, *d_range, *allow_zero_d);
            json!(ds.d.iter().zip(&ds.anchors).map(|(d, a)| json!([d, a])).collect::<Vec<_>>())
        }
        Instance::Hitting { tds, u, t_list, window } => {
            let tds = tds.clone().load()?;
            json!(hitting_time_set(&tds, u, t_list, *window, false)?.n)
        }
        Instance::Grunwald { q, f, n_max } => {
            let r = grunwald_number(*q, f, &GrunwaldOptions::default())?;
            if r.n <= *n_max {
                json!(r.n)
            } else {
                Value::Null
            }
        }
    })
}

pub fn run_naive(inst: &Instance) -> Result<Value> {
    Ok(match inst {
        Instance::Mono { coloring, f, d_range, allow_zero_d } => match naive_mono(coloring, f, *d_range, *allow_zero_d) {
            Some((color, a, d)) => json!({"color": color, "a": a, "d": d}),
            None => Value::Null,
        },
        Instance::Diffset { coloring, f, color, d_range, allow_zero_d } => {
            json!(naive_diffset(coloring, f, *color, *d_range, *allow_zero_d)
                .into_iter()
                .map(|(d, a)| json!([d, a]))
                .collect::<Vec<_>>())
        }
        Instance::Hitting { tds, u, t_list, window } => {
            let tds = tds.clone().load()?;
            json!(naive_hitting(&tds, u, t_list, *window))
        }
        Instance::Grunwald { q, f, n_max } => json!(naive_grunwald(*q, f, *n_max)?),
    })
}

fn compare(inst: &Instance, optimized: Value, naive: Value) -> Result<DiffReport> {
    Ok(DiffReport {
        operation: inst.operation().into(),
        instance: serde_json::to_value(inst)?,
        agree: optimized == naive,
        optimized,
        naive,
    })
}

/// Reruns a report's instance through both implementations.
pub fn replay(report: &DiffReport) -> Result<DiffReport> {
    let inst: Instance = serde_json::from_value(report.instance.clone())?;
    compare(&inst, run_optimized(&inst)?, run_naive(&inst)?)
}

/// Seeded instances of one suite. Grünwald instances are limited to those
/// the naive enumeration can decide.
pub fn suite_instances(suite: Suite, seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match suite {
        Suite::Mono | Suite::Diffset => (0..count)
            .map(|_| {
                let dim = if rng.gen_bool(0.25) { 2 } else { 1 };
                let q = rng.gen_range(1..=3);
                let coloring = random_coloring(&mut rng, dim, if dim == 1 { 40 } else { 7 }, q);
                let size = rng.gen_range(1..=3);
                let f = random_config(&mut rng, dim, size, if dim == 1 { 5 } else { 2 });
                let (d_range, allow_zero_d) = random_d_range(&mut rng, 8);
                if suite == Suite::Mono {
                    Instance::Mono { coloring, f, d_range, allow_zero_d }
                } else {
                    let color = rng.gen_range(1..=q);
                    Instance::Diffset { coloring, f, color, d_range, allow_zero_d }
                }
            })
            .collect(),
        Suite::Hitting => (0..count)
            .map(|_| {
                let tds = random_commuting_tds(&mut rng, 10, 3);
                let k = tds.generators().len();
                let n = rng.gen_range(1..=3);
                let t_list = random_time_elements(&mut rng, k, n, 2);
                let u = random_subset(&mut rng, tds.states());
                let lo = rng.gen_range(0..5);
                let window = (lo, lo + rng.gen_range(0..30));
                Instance::Hitting { tds: (&tds).into(), u, t_list, window }
            })
            .collect(),
        Suite::Grunwald => {
            let mut all = Vec::new();
            for q in 1..=3u8 {
                for mask in 1u32..16 {
                    let f: Vec<u64> = (0..4).filter(|b| mask >> b & 1 == 1).collect();
                    let f = ConfigSet::ints(&f).expect("distinct");
                    let inst = Instance::Grunwald { q, f: f.clone(), n_max: 24 };
                    if naive_grunwald(q, &f, 24).is_ok() {
                        all.push(inst);
                    }
                }
            }
            for q in 1..=2u8 {
                let corner = ConfigSet::points(vec![vec![0, 0], vec![0, 1], vec![1, 0]]).expect("distinct");
                if naive_grunwald(q, &corner, 5).is_ok() {
                    all.push(Instance::Grunwald { q, f: corner, n_max: 5 });
                }
            }
            all.shuffle(&mut rng);
            all.truncate(count);
            all
        }
    }
}

/// Runs the optimized engine against the naive oracle on every instance of
/// the suite. Fails with `Disagreement` on the first mismatch.
pub fn cross_check(suite: Suite, seed: u64, count: usize) -> Result<Vec<DiffReport>> {
    cross_check_with(suite, seed, count, run_optimized)
}

/// As [`cross_check`], with the optimized side replaced by `optimized`.
/// Used to confirm that the harness notices a broken implementation.
pub fn cross_check_with(
    suite: Suite,
    seed: u64,
    count: usize,
    optimized: impl Fn(&Instance) -> Result<Value>,
) -> Result<Vec<DiffReport>> {
    let mut reports = Vec::new();
    for inst in suite_instances(suite, seed, count) {
        let report = compare(&inst, optimized(&inst)?, run_naive(&inst)?)?;
        if !report.agree {
            return Err(Error::Disagreement(Box::new(report)));
        }
        reports.push(report);
    }
    Ok(reports)
}
