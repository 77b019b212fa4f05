//! Command-line front end.
//!
//! Every subcommand calls one library operation and prints either a short
//! human summary or, with `--json`, the full report. Exit codes: `0` when the
//! property holds or the computation succeeded, `2` when a counterexample or
//! violation was found, `1` for input, I/O and budget errors.

mod cert;
mod commands;
pub mod input;

pub use cert::Certificate;

use crate::Error;
use clap::{Args, Parser, Subcommand};
use serde_json::Value;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "semiramsey", version, about = "Ramsey-type computations on semimodules over semirings")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Print the full report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Node budget for exhaustive searches.
    #[arg(long, global = true, env = "RAMSEY_BUDGET")]
    pub budget: Option<u64>,
    /// Worker threads for parallel searches.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Allow the scalar d = 0 in copies a + dF.
    #[arg(long, global = true)]
    pub allow_zero_d: bool,
    /// Write the certificate (or the report, if there is none) to PATH.
    #[arg(long, global = true, value_name = "PATH")]
    pub emit_cert: Option<PathBuf>,
}

/// Where a coloring comes from: a JSON file or an inline digit string.
#[derive(Args, Debug, Clone)]
pub struct ColoringArgs {
    #[arg(long, value_name = "FILE", conflicts_with = "colors", required_unless_present = "colors")]
    pub coloring: Option<PathBuf>,
    /// Digit string such as 11221122.
    #[arg(long)]
    pub colors: Option<String>,
    /// First position of an inline coloring.
    #[arg(long, default_value_t = 0)]
    pub lo: u64,
    /// Number of colors of an inline coloring (default: largest digit).
    #[arg(long)]
    pub q: Option<u8>,
}

/// Where a system comes from: a TDS JSON file or inline generator maps.
#[derive(Args, Debug, Clone)]
pub struct TdsArgs {
    #[arg(long, value_name = "FILE", conflicts_with = "maps", required_unless_present = "maps")]
    pub tds: Option<PathBuf>,
    /// Generators as JSON, e.g. [[1,2,0]].
    #[arg(long)]
    pub maps: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the axioms of a tabulated structure or a windowed preset.
    Validate {
        #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
        file: Option<PathBuf>,
        /// nat:W or natvec:n:W
        #[arg(long)]
        preset: Option<String>,
        /// Validate the lattice module over the preset instead of the semiring.
        #[arg(long)]
        module: bool,
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decide whether no k nil sets cover the semiring.
    Star {
        #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
        file: Option<PathBuf>,
        #[arg(long)]
        preset: Option<String>,
        #[arg(long)]
        k: usize,
    },
    /// Enumerate the copies a + dF inside a window.
    Copies {
        #[arg(long = "F")]
        f: String,
        #[arg(long)]
        window: String,
        #[arg(long)]
        d: Option<String>,
        /// How many copies to list.
        #[arg(long, default_value_t = 50)]
        limit: usize,
    },
    /// Check or find a syndetic gap certificate for D.
    Syndetic {
        #[arg(long = "D")]
        d: String,
        #[arg(long)]
        window: String,
        #[arg(long = "K")]
        k: Option<String>,
    },
    /// Find the first monochromatic copy of F.
    Mono {
        #[command(flatten)]
        coloring: ColoringArgs,
        #[arg(long = "F")]
        f: String,
        #[arg(long)]
        d: Option<String>,
    },
    /// The scalars d admitting a copy a + dF in one color class.
    Diffset {
        #[command(flatten)]
        coloring: ColoringArgs,
        #[arg(long = "F")]
        f: String,
        #[arg(long)]
        color: u8,
        #[arg(long)]
        d: Option<String>,
    },
    /// Exact Grünwald number N(q, F).
    Grunwald {
        #[arg(long)]
        q: u8,
        #[arg(long = "F")]
        f: String,
    },
    /// Difference sets of S with gap certificates.
    Vdwset {
        #[arg(long = "S")]
        s: String,
        #[arg(long)]
        window: String,
        /// Repeat for several configurations.
        #[arg(long = "F", required = true)]
        f: Vec<String>,
        #[arg(long)]
        d: Option<String>,
        #[arg(long, default_value_t = crate::ramsey::DEFAULT_SYNDETIC_RATIO)]
        ratio: f64,
    },
    /// First copy a + dF on which n ↦ frac(αn) has small diameter.
    Diameter {
        #[arg(long)]
        alphas: String,
        #[arg(long)]
        window: String,
        #[arg(long)]
        eps: f64,
        #[arg(long = "F")]
        f: String,
        #[arg(long)]
        d: Option<String>,
    },
    /// Search for b and a + Fb inside one color class.
    SchurBrauer {
        #[command(flatten)]
        coloring: ColoringArgs,
        #[arg(long = "F")]
        f: String,
        /// Allow the anchor a to have any color.
        #[arg(long)]
        any_anchor: bool,
    },
    /// Color a finite semimodule in every way and look for monochromatic copies.
    PartitionCheck {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        q: u8,
        /// Element indices.
        #[arg(long = "F")]
        f: String,
    },
    /// Check a system file.
    TdsValidate {
        #[command(flatten)]
        tds: TdsArgs,
    },
    /// Minimal subsets of a system.
    Minimal {
        #[command(flatten)]
        tds: TdsArgs,
    },
    /// Uniform recurrence of a point.
    Recurrence {
        #[command(flatten)]
        tds: TdsArgs,
        #[arg(long)]
        x: usize,
        /// Time element, e.g. 1:0.
        #[arg(long)]
        along: Option<String>,
    },
    /// Multiple hitting-time set of U.
    Hitting {
        #[command(flatten)]
        tds: TdsArgs,
        #[arg(long = "U")]
        u: String,
        /// Repeat for each T_i; e.g. --T 1 --T 2 or --T 1:0.
        #[arg(long = "T", required = true)]
        t: Vec<String>,
        #[arg(long, default_value = "0:64")]
        window: String,
        /// Only start from the first minimal set meeting U.
        #[arg(long)]
        restrict: bool,
    },
    /// Hitting-time set of some member of an open cover.
    Cover {
        #[command(flatten)]
        tds: TdsArgs,
        /// Members separated by ';', e.g. 0,1;2,3.
        #[arg(long)]
        cover: String,
        #[arg(long = "T", required = true)]
        t: Vec<String>,
        #[arg(long, default_value = "0:64")]
        window: String,
    },
    /// Build a group extension.
    Skew {
        #[arg(long)]
        file: PathBuf,
    },
    /// Check that the points over a recurrent base point are recurrent.
    LiftCheck {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        x: usize,
    },
    /// Pattern subshift of a coloring and its weak-central certificate.
    Subshift {
        #[command(flatten)]
        coloring: ColoringArgs,
        #[arg(long, default_value = "0")]
        shape: String,
        /// Treat the coloring as eventually periodic (exact results).
        #[arg(long)]
        periodic: bool,
    },
    /// Look for a long run of S with bounded gaps.
    Piecewise {
        #[arg(long = "S")]
        s: String,
        #[arg(long)]
        window: String,
        #[arg(long)]
        gap: u64,
        #[arg(long)]
        run: u64,
    },
    /// Time average of f(frac(p(x))) against the circle average.
    Equidist {
        /// Coefficients a0,a1,… of p.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// const:c, cos:k, sin:k, bump:center:width or trig:a0:c..:s..
        #[arg(long = "f", default_value = "cos:1")]
        f: String,
        #[arg(long = "T")]
        horizon: f64,
        #[arg(long, default_value_t = crate::dynamics::MAX_STEP)]
        step: f64,
        #[arg(long, default_value_t = 0.01)]
        tol: f64,
    },
    /// Enveloping semigroup of a system.
    Semigroup {
        #[command(flatten)]
        tds: TdsArgs,
    },
    /// Minimal left ideals and idempotents of the enveloping semigroup.
    Ideals {
        #[command(flatten)]
        tds: TdsArgs,
    },
    /// Minimality of the orbit of Λ in the product system X^n.
    Lemma21 {
        #[command(flatten)]
        tds: TdsArgs,
        #[arg(long = "T", required = true)]
        t: Vec<String>,
        /// "diagonal" or JSON points, e.g. [[0,0],[1,1]].
        #[arg(long, default_value = "diagonal")]
        lambda: String,
        #[arg(long, default_value = "0:32")]
        t_window: String,
    },
    /// Run the optimized engine against the naive oracle.
    OracleDiff {
        /// mono, diffset, hitting or grunwald
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Write every report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate written by --emit-cert.
    Verify {
        #[arg(long)]
        cert: PathBuf,
    },
}

/// What a command produced.
pub(crate) struct Outcome {
    pub report: Value,
    pub human: String,
    pub code: i32,
    pub cert: Option<Certificate>,
}

/// Errors that mean "the input violates the property being checked" rather
/// than "the input could not be processed".
fn is_violation(e: &Error) -> bool {
    matches!(
        e,
        Error::NonCommuting { .. }
            | Error::InvalidAction(_)
            | Error::CocycleViolation { .. }
            | Error::BaseNotRecurrent(_)
            | Error::HypothesisFailed(_)
            | Error::NotACover { .. }
            | Error::Disagreement(_)
    )
}

/// A closed stdout (e.g. piping into `head`) is not an error.
fn print_outcome(out: &Outcome, json: bool) {
    let text = if json { serde_json::to_string_pretty(&out.report).unwrap_or_default() } else { out.human.trim_end().to_owned() };
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    let result = match cli.global.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(|| commands::execute(&cli)),
            Err(e) => Err(Error::invalid(format!("cannot start {n} threads: {e}"))),
        },
        None => commands::execute(&cli),
    };
    let out = match result {
        Ok(out) => out,
        Err(e) if is_violation(&e) => {
            let report = match &e {
                Error::Disagreement(r) => serde_json::json!({"violation": e.to_string(), "report": r}),
                _ => serde_json::json!({"violation": e.to_string()}),
            };
            Outcome { human: format!("violation: {e}"), report, code: EXIT_VIOLATION, cert: None }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::BudgetExceeded { partial: Some(p), .. } = &e {
                eprintln!("best lower bound so far: {}", p.lower_bound);
            }
            return EXIT_ERROR;
        }
    };
    print_outcome(&out, cli.global.json);
    if let Some(path) = &cli.global.emit_cert {
        let body = match &out.cert {
            Some(c) => serde_json::to_string_pretty(c),
            None => serde_json::to_string_pretty(&out.report),
        };
        if let Err(e) = body.map_err(Error::from).and_then(|b| std::fs::write(path, b + "\n").map_err(Error::from)) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_ERROR;
        }
    }
    out.code
}
