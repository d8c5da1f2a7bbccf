mod cache;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hilbfilt::bounds::{self, BoundReport};
use hilbfilt::corpus::{run_campaign, CampaignReport, GenSpec};
use hilbfilt::fixtures::{run_fixtures, FixtureSet};
use hilbfilt::input::{parse_filtration, parse_gen_spec, parse_parts};
use hilbfilt::{Error, GoodFiltration, HilbertConfig, HilbertData, Result, XiVector};
use num_bigint::BigUint;
use serde::Serialize;

use crate::cache::Cache;

#[derive(Parser)]
#[command(
    name = "hilbfilt",
    version,
    about = "Hilbert coefficients of good filtrations and bound checks"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Largest sampling horizon before giving up on stabilization.
    #[arg(long, global = true, value_name = "N")]
    horizon_cap: Option<usize>,
    /// Largest staircase box volume.
    #[arg(long, global = true, value_name = "N")]
    box_cap: Option<u64>,
    /// Bypass the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert coefficients, xi invariants, reduction and postulation numbers.
    Coeffs { file: PathBuf },
    /// Check the bounds for a pair of filtrations over the same module and ideal.
    CheckPair { f: PathBuf, f_prime: PathBuf },
    /// Compare a filtration against the adic filtration of its base ideal.
    CheckCor34 { file: PathBuf },
    /// `base_ideal` is a pure-power parameter ideal Q, `prefix` is `[F1]`.
    CheckCor35 { file: PathBuf },
    /// Run a seeded campaign.
    Corpus {
        spec: Option<PathBuf>,
        #[arg(long, value_name = "S")]
        seed: Option<u64>,
        /// Write the full report, timings included.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Write the slack table.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Run the golden fixtures.
    Fixtures {
        #[arg(long)]
        list: bool,
        /// Use this fixture file instead of the built-in set.
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
    },
}

/// Output is buffered so a closed pipe never aborts a command midway.
macro_rules! say {
    ($out:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        writeln!($out, $($arg)*).expect("writing to a String cannot fail")
    }};
}

/// Exit status besides operational errors.
enum Status {
    Ok,
    Violation,
}

struct Ctx {
    out: String,
    json: bool,
    cfg: HilbertConfig,
    cache: Cache,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse {
            line,
            column,
            message,
        } => Error::Parse {
            line,
            column,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

fn load_filtration(path: &Path) -> Result<GoodFiltration> {
    with_path(path, parse_filtration(&read(path)?)).map(|p| p.filtration)
}

fn instance_name(path: &Path) -> String {
    path.file_stem().map_or_else(
        || path.display().to_string(),
        |s| s.to_string_lossy().into_owned(),
    )
}

fn list(values: &[impl ToString]) -> String {
    let items: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CoeffsOutput {
    #[serde(flatten)]
    hilbert: HilbertData,
    #[serde(with = "hilbfilt::serde_big::uint_vec")]
    xi: Vec<BigUint>,
    reduction_number: usize,
    #[serde(with = "hilbfilt::serde_big::uint")]
    h0: BigUint,
}

fn cmd_coeffs(ctx: &mut Ctx, file: &Path) -> Result<Status> {
    let f = load_filtration(file)?;
    let h0 = f.module().h0().clone();
    let r = f.reduction_number();
    let hilbert = ctx.cache.hilbert(&f, &ctx.cfg)?;
    let xi = XiVector::from_coefficients(&hilbert.coefficients)?;
    if ctx.json {
        let out = CoeffsOutput {
            hilbert,
            xi: xi.0,
            reduction_number: r,
            h0,
        };
        say!(
            ctx.out,
            "{}",
            serde_json::to_string_pretty(&out).expect("output serializes")
        );
    } else {
        say!(ctx.out, "d = {}", hilbert.dim);
        say!(
            ctx.out,
            "e = {}, r = {r}, n_post = {}",
            list(&hilbert.coefficients),
            hilbert.postulation
        );
        say!(ctx.out, "xi = {}", list(xi.values()));
        say!(ctx.out, "h0 = {h0}");
    }
    Ok(Status::Ok)
}

fn short_number(s: &str) -> String {
    if s.len() <= 24 {
        s.to_string()
    } else {
        format!("<{} digits>", s.trim_start_matches('-').len())
    }
}

fn emit_reports(ctx: &mut Ctx, reports: &[BoundReport]) -> Status {
    let failed = reports.iter().filter(|r| !r.holds).count();
    if ctx.json {
        say!(
            ctx.out,
            "{}",
            serde_json::to_string_pretty(reports).expect("reports serialize")
        );
    } else {
        say!(
            ctx.out,
            "{:<18} {:>24} {:>24}  {:<5} {:>12}",
            "statement",
            "lhs",
            "rhs",
            "holds",
            "slack_log2"
        );
        for r in reports {
            say!(
                ctx.out,
                "{:<18} {:>24} {:>24}  {:<5} {:>12}",
                r.label(),
                short_number(&r.lhs.to_string()),
                short_number(&r.rhs.to_string()),
                if r.holds { "yes" } else { "NO" },
                match r.slack_log2.finite() {
                    Some(s) => format!("{s:.3}"),
                    None => r.slack_log2.to_string(),
                }
            );
        }
        for note in reports
            .iter()
            .filter_map(|r| r.proxy_note.as_ref().map(|n| (r.label(), n)))
        {
            say!(ctx.out, "note {}: {}", note.0, note.1);
        }
        if failed == 0 {
            say!(ctx.out, "all {} checks hold", reports.len());
        } else {
            say!(
                ctx.out,
                "VIOLATION: {failed} of {} checks fail",
                reports.len()
            );
        }
    }
    if failed == 0 {
        Status::Ok
    } else {
        Status::Violation
    }
}

fn cmd_check_pair(ctx: &mut Ctx, f: &Path, fp: &Path) -> Result<Status> {
    let a = load_filtration(f)?;
    let b = load_filtration(fp)?;
    if a.module() != b.module() {
        return Err(Error::ModuleMismatch);
    }
    if a.base() != b.base() {
        return Err(Error::BaseIdealMismatch);
    }
    let a = ctx.cache.analysis(a, &ctx.cfg)?;
    let b = ctx.cache.analysis(b, &ctx.cfg)?;
    let reports = bounds::pair_reports(&instance_name(f), &a, &b)?;
    Ok(emit_reports(ctx, &reports))
}

fn cmd_check_cor34(ctx: &mut Ctx, file: &Path) -> Result<Status> {
    let f = load_filtration(file)?;
    let adic = GoodFiltration::adic(f.base().clone(), f.module().clone())?;
    let a = ctx.cache.analysis(f, &ctx.cfg)?;
    let b = ctx.cache.analysis(adic, &ctx.cfg)?;
    let reports = bounds::adic_comparison_reports(&instance_name(file), &a, &b)?;
    Ok(emit_reports(ctx, &reports))
}

fn cmd_check_cor35(ctx: &mut Ctx, file: &Path) -> Result<Status> {
    let parts = with_path(file, parse_parts(&read(file)?))?;
    if !parts.module.is_free() {
        return Err(Error::NotFreeModule);
    }
    let [first] = parts.prefix.as_slice() else {
        return Err(Error::InvalidInput(
            "prefix must list exactly one ideal, the first term F1".into(),
        ));
    };
    let (e, q_adic) = bounds::parameter_filtrations(first, &parts.base)?;
    let e = ctx.cache.analysis(e, &ctx.cfg)?;
    let q_adic = ctx.cache.analysis(q_adic, &ctx.cfg)?;
    let reports = bounds::parameter_reports(&instance_name(file), &e, &q_adic, ctx.cfg.box_cap)?;
    Ok(emit_reports(ctx, &reports))
}

fn write_csv(path: &Path, reports: &[BoundReport]) -> Result<()> {
    let io = |e: csv::Error| Error::InvalidInput(format!("{}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    w.write_record([
        "instance",
        "statement",
        "index",
        "lhs",
        "rhs_digits",
        "holds",
        "slack_log2",
    ])
    .map_err(io)?;
    for r in reports {
        w.write_record([
            r.instance.clone(),
            r.statement_id.to_string(),
            r.index.map_or(String::new(), |i| i.to_string()),
            r.lhs.to_string(),
            r.rhs_digits.to_string(),
            r.holds.to_string(),
            r.slack_log2
                .finite()
                .map_or_else(|| r.slack_log2.to_string(), |s| s.to_string()),
        ])
        .map_err(io)?;
    }
    w.flush()
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn print_campaign(out: &mut String, report: &CampaignReport) {
    say!(
        out,
        "instances: {} requested, {} checked, {} rejected ({:.1}%)",
        report.spec.count,
        report.instances_checked,
        report.rejections.len(),
        100.0 * report.rejection_rate()
    );
    say!(
        out,
        "{:<14} {:>8} {:>6} {:>10}",
        "statement",
        "pass",
        "fail",
        "instances"
    );
    for (id, t) in &report.tallies {
        say!(
            out,
            "{id:<14} {:>8} {:>6} {:>10}",
            t.pass,
            t.fail,
            t.instances
        );
    }
    for (name, s) in [("max", &report.max_slack), ("min", &report.min_slack)] {
        if let Some(s) = s {
            say!(
                out,
                "{name} slack_log2: {:.3} ({} {})",
                s.slack_log2,
                s.instance,
                s.statement
            );
        }
    }
    for r in report.rejections.iter().take(5) {
        say!(out, "rejected {}: {}", r.instance, r.reason);
    }
    for v in &report.violations {
        say!(
            out,
            "VIOLATION {} {}: lhs {} rhs {}",
            v.instance,
            v.label(),
            v.lhs,
            v.rhs
        );
    }
    for m in &report.refit_mismatches {
        say!(out, "REFIT MISMATCH {m}");
    }
    if let Some(t) = &report.timing {
        say!(
            out,
            "time: {:.0} ms wall (fit {:.0}, refit {:.0}, check {:.0}, generate {:.0})",
            t.wall_ms,
            t.fit_ms,
            t.refit_ms,
            t.check_ms,
            t.generate_ms
        );
    }
}

fn cmd_corpus(
    ctx: &mut Ctx,
    spec: Option<&Path>,
    seed: Option<u64>,
    out: Option<&Path>,
    csv_path: Option<&Path>,
) -> Result<Status> {
    let mut spec = match spec {
        Some(p) => with_path(p, parse_gen_spec(&read(p)?))?,
        None => GenSpec::default(),
    };
    if let Some(s) = seed {
        spec.seed = s;
    }
    let run = run_campaign(&spec, &ctx.cfg)?;
    if let Some(p) = out {
        write(
            p,
            &serde_json::to_string_pretty(&run.report).expect("report serializes"),
        )?;
    }
    if let Some(p) = csv_path {
        write_csv(p, &run.reports)?;
    }
    if ctx.json {
        say!(
            ctx.out,
            "{}",
            serde_json::to_string_pretty(&run.report).expect("report serializes")
        );
    } else {
        print_campaign(&mut ctx.out, &run.report);
    }
    Ok(if run.report.has_violations() {
        Status::Violation
    } else {
        Status::Ok
    })
}

fn cmd_fixtures(ctx: &mut Ctx, list_only: bool, file: Option<&Path>) -> Result<Status> {
    let set = match file {
        Some(p) => with_path(p, FixtureSet::parse(&read(p)?))?,
        None => FixtureSet::builtin(),
    };
    if list_only {
        for id in set.ids() {
            say!(ctx.out, "{id}");
        }
        return Ok(Status::Ok);
    }
    let run = run_fixtures(&set);
    let failed = run.failures().count();
    if ctx.json {
        let rows: Vec<_> = run
            .results
            .iter()
            .map(|r| serde_json::json!({ "id": r.id, "passed": r.passed(), "expected": r.expected, "actual": r.actual }))
            .collect();
        say!(
            ctx.out,
            "{}",
            serde_json::to_string_pretty(&rows).expect("rows serialize")
        );
    } else {
        for r in &run.results {
            say!(
                ctx.out,
                "{} {}",
                if r.passed() { "PASS" } else { "FAIL" },
                r.id
            );
        }
        for r in run.failures() {
            ctx.out.push_str(&r.diff());
        }
        say!(
            ctx.out,
            "{} of {} fixtures passed in {:.1} ms",
            run.results.len() - failed,
            run.results.len(),
            run.elapsed.as_secs_f64() * 1e3
        );
    }
    Ok(if failed == 0 {
        Status::Ok
    } else {
        Status::Violation
    })
}

fn run(cli: Cli, out: &mut String) -> Result<Status> {
    let defaults = HilbertConfig::default();
    let cfg = HilbertConfig {
        horizon_cap: cli.global.horizon_cap.unwrap_or(defaults.horizon_cap),
        box_cap: cli.global.box_cap.unwrap_or(defaults.box_cap),
    };
    let mut ctx = Ctx {
        out: String::new(),
        json: cli.global.json,
        cfg,
        cache: Cache::from_env(!cli.global.no_cache),
    };
    let status = match &cli.command {
        Command::Coeffs { file } => cmd_coeffs(&mut ctx, file),
        Command::CheckPair { f, f_prime } => cmd_check_pair(&mut ctx, f, f_prime),
        Command::CheckCor34 { file } => cmd_check_cor34(&mut ctx, file),
        Command::CheckCor35 { file } => cmd_check_cor35(&mut ctx, file),
        Command::Corpus {
            spec,
            seed,
            out,
            csv,
        } => cmd_corpus(
            &mut ctx,
            spec.as_deref(),
            *seed,
            out.as_deref(),
            csv.as_deref(),
        ),
        Command::Fixtures { list, file } => cmd_fixtures(&mut ctx, *list, file.as_deref()),
    };
    *out = ctx.out;
    status
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // Usage errors are operational; exit 2 is reserved for violations.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = String::new();
    let status = run(cli, &mut out);
    let _ = std::io::stdout().write_all(out.as_bytes());
    match status {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Violation) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
