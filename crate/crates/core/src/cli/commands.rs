use super::input::{self, load_json};
use super::{Certificate, Cli, ColoringArgs, Command, GlobalOpts, Outcome, TdsArgs, EXIT_OK, EXIT_VIOLATION};
use crate::algebra::{
    check_star_condition, check_star_condition_windowed, validate_semimodule, validate_semiring, validate_windowed_module,
    validate_windowed_semiring, LatticeModule, Structure, StructureFile, WindowedSemiring,
};
use crate::configs::{check_syndetic, enumerate_copies, min_gap_certificate, ConfigSet, ScalarRange, Window};
use crate::dynamics::{
    cover_recurrence, furstenberg_subshift, hitting_time_set, minimal_sets, piecewise_syndetic_check, poly_equidistribution,
    uniform_recurrence, verify_uniform_recurrence_lift, verify_weak_central, FiniteTds, SkewFile, TdsFile, TestFn,
};
use crate::ellis::{generate_semigroup, ideal_analysis, verify_lemma21, ProductSystem, DEFAULT_SEMIGROUP_BUDGET};
use crate::oracle::{cross_check, DiffReport};
use crate::ramsey::{
    diameter_search, diff_set, exhaustive_partition_check, find_mono_copy, grunwald_number, schur_brauer_search,
    verify_vdw_set, Coloring, GrunwaldOptions, DEFAULT_BUDGET,
};
use crate::{Error, Result};
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt::Write as _;

/// Budget for the smaller enumerations (star covers, partitions) when none
/// is given.
const SMALL_BUDGET: u64 = 10_000_000;

fn to_value<T: Serialize>(x: &T) -> Result<Value> {
    Ok(serde_json::to_value(x)?)
}

fn outcome(report: Value, human: String, ok: bool) -> Outcome {
    Outcome { report, human, code: if ok { EXIT_OK } else { EXIT_VIOLATION }, cert: None }
}

fn load_coloring(args: &ColoringArgs) -> Result<Coloring> {
    match (&args.coloring, &args.colors) {
        (Some(path), _) => load_json(path),
        (None, Some(digits)) => {
            let max = digits.chars().filter_map(|c| c.to_digit(10)).max().unwrap_or(1) as u8;
            Coloring::from_digits(args.lo, args.q.unwrap_or(max.max(1)), digits)
        }
        (None, None) => Err(Error::invalid("give --coloring FILE or --colors DIGITS")),
    }
}

fn load_tds(args: &TdsArgs) -> Result<FiniteTds> {
    match (&args.tds, &args.maps) {
        (Some(path), _) => load_json::<TdsFile>(path)?.load(),
        (None, Some(maps)) => {
            let maps: Vec<Vec<usize>> = serde_json::from_str(maps)?;
            let n = maps.first().map_or(0, Vec::len);
            FiniteTds::new(n, maps)
        }
        (None, None) => Err(Error::invalid("give --tds FILE or --maps JSON")),
    }
}

fn elements(list: &[String]) -> Result<Vec<Vec<u64>>> {
    list.iter().map(|s| input::element(s)).collect()
}

/// `--d` if given, else every `d` up to the largest window coordinate.
fn d_range(d: &Option<String>, w: &Window, g: &GlobalOpts) -> Result<ScalarRange> {
    match d {
        Some(s) => input::scalar_range(s),
        None => Ok(ScalarRange { lo: if g.allow_zero_d { 0 } else { 1 }, hi: w.hi.iter().copied().max().unwrap_or(1).max(1) }),
    }
}

fn list<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub(crate) fn execute(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Validate { file, preset, module, samples, seed } => validate(file.as_deref(), preset.as_deref(), *module, *samples, *seed),
        Command::Star { file, preset, k } => {
            let r = match (file, preset) {
                (Some(path), _) => match StructureFile::parse(&std::fs::read_to_string(path)?)? {
                    Structure::Semiring(ring) => check_star_condition(&ring, *k, g.budget.unwrap_or(SMALL_BUDGET))?,
                    Structure::Semimodule(_) => return Err(Error::invalid("star needs a semiring file")),
                },
                (None, Some(p)) => check_star_condition_windowed(&WindowedSemiring::parse(p)?, *k),
                (None, None) => return Err(Error::invalid("give --file or --preset")),
            };
            let human = match &r.witness {
                None => format!("condition holds for k = {}", r.k),
                Some(w) => format!("condition fails for k = {}: nil sets of [{}] cover R", r.k, list(w)),
            };
            Ok(outcome(to_value(&r)?, human, r.holds))
        }
        Command::Copies { f, window, d, limit } => {
            let f = input::config(f)?;
            let w = input::window(window)?;
            let range = d_range(d, &w, g)?;
            let mut count = 0usize;
            let mut shown = Vec::new();
            for c in enumerate_copies(&f, &w, range, g.allow_zero_d) {
                if shown.len() < *limit {
                    shown.push(c);
                }
                count += 1;
            }
            let mut human = format!("{count} copies\n");
            for c in &shown {
                let _ = writeln!(human, "a={:?} d={} -> {:?}", c.a, c.d, c.realized);
            }
            Ok(outcome(json!({"count": count, "copies": shown}), human, true))
        }
        Command::Syndetic { d, window, k } => {
            let d = input::ints(d)?;
            let w = input::interval(window)?;
            let cert = match k {
                Some(k) => check_syndetic(&d, w, &input::ints(k)?)?,
                None => min_gap_certificate(&d, w)?,
            };
            let human = if cert.verified {
                format!("syndetic on [{}, {}] with K = {{{}}}", w.0, w.1, list(&cert.k))
            } else {
                format!("not syndetic with K = {{{}}}: translate t = {:?} misses D", list(&cert.k), cert.failing_t)
            };
            let ok = cert.verified;
            let mut out = outcome(to_value(&cert)?, human, ok);
            if ok {
                out.cert = Some(Certificate::Syndetic { certificate: cert });
            }
            Ok(out)
        }
        Command::Mono { coloring, f, d } => {
            let c = load_coloring(coloring)?;
            let f = input::config(f)?;
            let range = d_range(d, c.window(), g)?;
            match find_mono_copy(&c, &f, range, g.allow_zero_d) {
                Some(w) => {
                    let human = format!("color {}: a={:?} d={} -> {:?}", w.color, w.copy.a, w.copy.d, w.copy.realized);
                    let mut out = outcome(to_value(&w)?, human, true);
                    out.cert = Some(Certificate::Mono { coloring: c, witness: w });
                    Ok(out)
                }
                None => Ok(outcome(Value::Null, "no monochromatic copy".into(), false)),
            }
        }
        Command::Diffset { coloring, f, color, d } => {
            let c = load_coloring(coloring)?;
            let f = input::config(f)?;
            let range = d_range(d, c.window(), g)?;
            let ds = diff_set(&c, &f, *color, range, g.allow_zero_d);
            let human = format!("D = {{{}}}", list(&ds.d));
            let mut out = outcome(to_value(&ds)?, human, true);
            out.cert = Some(Certificate::Diffset { coloring: c, diff: ds });
            Ok(out)
        }
        Command::Grunwald { q, f } => {
            let f = input::config(f)?;
            let opts = GrunwaldOptions {
                budget: g.budget.unwrap_or(DEFAULT_BUDGET),
                threads: g.threads,
                allow_zero_d: g.allow_zero_d,
            };
            let r = grunwald_number(*q, &f, &opts)?;
            let mut human = format!("N = {}\n", r.n);
            if let Some(c) = &r.extremal {
                let shown = c.digits().unwrap_or_else(|| format!("{:?}", c.colors()));
                let _ = writeln!(human, "extremal coloring of {} cells: {shown}", c.colors().len());
            }
            let _ = writeln!(human, "nodes {} prunes {}", r.stats.nodes, r.stats.prunes);
            let mut out = outcome(to_value(&r)?, human, true);
            out.cert = Some(Certificate::Grunwald { result: r });
            Ok(out)
        }
        Command::Vdwset { s, window, f, d, ratio } => {
            let s = input::ints(s)?;
            let w = input::interval(window)?;
            let fs = f.iter().map(|x| input::config(x)).collect::<Result<Vec<_>>>()?;
            let range = d_range(d, &Window::interval(w.0, w.1), g)?;
            let r = verify_vdw_set(&s, w, &fs, range, g.allow_zero_d, *ratio)?;
            let mut human = String::new();
            if r.not_syndetic_input {
                human.push_str("warning: S does not look syndetic on this window\n");
            }
            let mut ok = true;
            for e in &r.entries {
                let verified = e.certificate.as_ref().is_some_and(|c| c.verified);
                ok &= verified;
                let _ = writeln!(human, "F={:?}: D = {{{}}} syndetic: {verified}", e.diff.f.elements(), list(&e.diff.d));
            }
            Ok(outcome(to_value(&r)?, human, ok))
        }
        Command::Diameter { alphas, window, eps, f, d } => {
            let alphas = input::floats(alphas)?;
            let w = input::window(window)?;
            let f = input::config(f)?;
            let range = d_range(d, &w, g)?;
            let values = |p: &[u64]| -> Vec<f64> {
                alphas.iter().flat_map(|a| p.iter().map(move |&x| (a * x as f64).rem_euclid(1.0))).collect()
            };
            match diameter_search(values, &w, *eps, &f, range, g.allow_zero_d) {
                Some(hit) => {
                    let human = format!("a={:?} d={} diameter {:.3e}", hit.a, hit.d, hit.diameter);
                    Ok(outcome(to_value(&hit)?, human, true))
                }
                None => Ok(outcome(Value::Null, "no copy with small diameter".into(), false)),
            }
        }
        Command::SchurBrauer { coloring, f, any_anchor } => {
            let c = load_coloring(coloring)?;
            let f = input::ints(f)?;
            match schur_brauer_search(&c, &f, !any_anchor) {
                Some(w) => {
                    let human = format!("color {}: b={:?} a={:?}", w.j, w.b, w.a);
                    Ok(outcome(to_value(&w)?, human, true))
                }
                None => Ok(outcome(Value::Null, "no witness".into(), false)),
            }
        }
        Command::PartitionCheck { file, q, f } => {
            let Structure::Semimodule(m) = StructureFile::parse(&std::fs::read_to_string(file)?)? else {
                return Err(Error::invalid("partition-check needs a semimodule file"));
            };
            let f = ConfigSet::new(input::states(f)?)?;
            let r = exhaustive_partition_check(&m, *q, &f, !g.allow_zero_d, g.budget.unwrap_or(SMALL_BUDGET))?;
            let failing = r.entries.iter().filter(|e| e.witness.is_none() || (r.require_nonzero_d && e.zero_d_only)).count();
            let human = format!("{} colorings, {failing} without a witness", r.colorings);
            Ok(outcome(to_value(&r)?, human, r.passed))
        }
        Command::TdsValidate { tds } => {
            let t = load_tds(tds)?;
            let time = if t.is_nat_time() { "nat" } else { "tabulated" };
            let human = format!("valid: {} states, {} generators, {time} time", t.states(), t.generators().len());
            Ok(outcome(json!({"valid": true, "states": t.states(), "generators": t.generators().len(), "time": time}), human, true))
        }
        Command::Minimal { tds } => {
            let t = load_tds(tds)?;
            let r = minimal_sets(&t);
            let mut human = String::new();
            for (i, m) in r.minimal_sets.iter().enumerate() {
                let _ = writeln!(human, "M{i} = {{{}}}", list(m));
            }
            Ok(outcome(to_value(&r)?, human, true))
        }
        Command::Recurrence { tds, x, along } => {
            let t = load_tds(tds)?;
            let along = along.as_deref().map(input::element).transpose()?;
            let r = uniform_recurrence(&t, *x, along.as_deref())?;
            let human = format!("state {}: recurrent {}, return times {{{}}}", r.state, r.recurrent, list(&r.return_times));
            let ok = r.recurrent;
            Ok(outcome(to_value(&r)?, human, ok))
        }
        Command::Hitting { tds, u, t, window, restrict } => {
            let tf = load_tds(tds)?;
            let r = hitting_time_set(&tf, &input::states(u)?, &elements(t)?, input::interval(window)?, *restrict)?;
            let mut human = format!("N = {{{}}}\n", list(&r.n));
            if let Some(c) = &r.certificate {
                let _ = writeln!(human, "gap certificate with |K| = {}, verified {}", c.k_len(), c.verified());
            }
            let ok = r.is_syndetic();
            let mut out = outcome(to_value(&r)?, human, ok);
            if ok {
                out.cert = Some(Certificate::Hitting { tds: (&tf).into(), hitting: r });
            }
            Ok(out)
        }
        Command::Cover { tds, cover, t, window } => {
            let tf = load_tds(tds)?;
            let r = cover_recurrence(&tf, &input::cover(cover)?, &elements(t)?, input::interval(window)?)?;
            let human = format!("member {} = {{{}}}: N = {{{}}}", r.chosen, list(&r.u), list(&r.hitting.n));
            let ok = r.hitting.is_syndetic();
            Ok(outcome(to_value(&r)?, human, ok))
        }
        Command::Skew { file } => {
            let skew = load_json::<SkewFile>(file)?.load()?;
            let m = minimal_sets(&skew.product);
            let human = format!(
                "product of {} states, {} minimal sets",
                skew.product.states(),
                m.minimal_sets.len()
            );
            let report = json!({"product": TdsFile::from(&skew.product), "psi": skew.psi, "minimal_sets": m.minimal_sets});
            Ok(outcome(report, human, true))
        }
        Command::LiftCheck { file, x } => {
            let skew = load_json::<SkewFile>(file)?.load()?;
            let r = verify_uniform_recurrence_lift(&skew, *x)?;
            let ok = r.all_recurrent && r.automorphisms_commute && r.projections_minimal;
            let human = format!(
                "{} fiber points, all recurrent {}, automorphisms commute {}",
                r.fibers.len(),
                r.all_recurrent,
                r.automorphisms_commute
            );
            Ok(outcome(to_value(&r)?, human, ok))
        }
        Command::Subshift { coloring, shape, periodic } => {
            let c = load_coloring(coloring)?;
            let (approx, cert) = furstenberg_subshift(&c, &input::ints(shape)?, *periodic)?;
            let ok = verify_weak_central(&c, &approx, &cert);
            let human = format!(
                "{} patterns, minimal class of {}; color {} certified ({})",
                approx.nodes.len(),
                approx.minimal_class.len(),
                cert.j,
                cert.label
            );
            let mut out = outcome(json!({"approx": approx, "certificate": cert, "verified": ok}), human, ok);
            if ok {
                out.cert = Some(Certificate::WeakCentral { coloring: c, approx, certificate: cert });
            }
            Ok(out)
        }
        Command::Piecewise { s, window, gap, run } => {
            let r = piecewise_syndetic_check(&input::ints(s)?, input::interval(window)?, *gap, *run)?;
            let human = format!("holds {}: run {:?}, longest {:?}", r.holds, r.witness, r.longest_run);
            let ok = r.holds;
            Ok(outcome(to_value(&r)?, human, ok))
        }
        Command::Equidist { coeffs, f, horizon, step, tol } => {
            let r = poly_equidistribution(&input::floats(coeffs)?, &TestFn::parse(f)?, *horizon, *step)?;
            let human = format!(
                "time average {:.6}, space average {:.6}, discrepancy {:.2e} over {} samples",
                r.time_average, r.space_average, r.discrepancy, r.samples
            );
            let ok = r.discrepancy <= *tol;
            Ok(outcome(to_value(&r)?, human, ok))
        }
        Command::Semigroup { tds } => {
            let t = load_tds(tds)?;
            let budget = g.budget.map_or(DEFAULT_SEMIGROUP_BUDGET, |b| b as usize);
            let s = generate_semigroup(t.states(), t.action_maps(), budget)?;
            let human = format!("{} elements, identity adjoined: {}", s.len(), s.identity_adjoined);
            Ok(outcome(to_value(&s)?, human, true))
        }
        Command::Ideals { tds } => {
            let t = load_tds(tds)?;
            let budget = g.budget.map_or(DEFAULT_SEMIGROUP_BUDGET, |b| b as usize);
            let s = generate_semigroup(t.states(), t.action_maps(), budget)?;
            let r = ideal_analysis(&s);
            let human = format!(
                "{} minimal left ideals of size {:?}; {} idempotents, {} minimal",
                r.minimal_left_ideals.len(),
                r.minimal_left_ideals.iter().map(Vec::len).collect::<Vec<_>>(),
                r.idempotents.len(),
                r.minimal_idempotents.len()
            );
            Ok(outcome(to_value(&r)?, human, true))
        }
        Command::Lemma21 { tds, t, lambda, t_window } => {
            let tf = load_tds(tds)?;
            let t_list = elements(t)?;
            let lam: Vec<Vec<usize>> = if lambda == "diagonal" {
                ProductSystem::new(&tf, &t_list)?.diagonal()
            } else {
                serde_json::from_str(lambda)?
            };
            let r = verify_lemma21(&tf, &t_list, &lam, input::interval(t_window)?)?;
            let human = format!("|Σ| = {}, minimal {}", r.sigma.len(), r.minimal);
            let ok = r.minimal;
            Ok(outcome(to_value(&r)?, human, ok))
        }
        Command::OracleDiff { suite, seed, count, out } => {
            let reports: Vec<DiffReport> = cross_check(suite.parse()?, *seed, *count)?;
            if let Some(path) = out {
                std::fs::write(path, serde_json::to_string_pretty(&reports)?)?;
            }
            let human = format!("{} instances, all agree", reports.len());
            Ok(outcome(json!({"instances": reports.len(), "agree": true}), human, true))
        }
        Command::Verify { cert } => {
            let c: Certificate = load_json(cert)?;
            let ok = c.verify()?;
            Ok(outcome(json!({"kind": c.kind(), "verified": ok}), format!("{} certificate verified: {ok}", c.kind()), ok))
        }
    }
}

fn validate(file: Option<&std::path::Path>, preset: Option<&str>, module: bool, samples: usize, seed: u64) -> Result<Outcome> {
    fn render<W: Serialize + std::fmt::Debug>(r: &crate::algebra::ValidationReport<W>) -> Result<Outcome> {
        let mut human = if r.valid { format!("valid ({} instances)\n", r.instances_checked) } else { String::from("invalid\n") };
        for v in &r.violations {
            let _ = writeln!(human, "{}: {:?}", v.axiom, v.witness);
        }
        Ok(outcome(to_value(r)?, human, r.valid))
    }
    match (file, preset) {
        (Some(path), _) => match StructureFile::parse(&std::fs::read_to_string(path)?)? {
            Structure::Semiring(r) => render(&validate_semiring(&r)),
            Structure::Semimodule(m) => render(&validate_semimodule(&m)),
        },
        (None, Some(p)) if module => render(&validate_windowed_module(&LatticeModule::parse(p)?, samples, seed)),
        (None, Some(p)) => render(&validate_windowed_semiring(&WindowedSemiring::parse(p)?, samples, seed)),
        (None, None) => Err(Error::invalid("give --file or --preset")),
    }
}
