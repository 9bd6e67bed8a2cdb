//! Command-line front end.
//!
//! A run exits with 0 when everything succeeds. Failed checks and bad input
//! give 1; malformed command lines give 2.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;
use serde::Serialize;

use crate::catalog::CatalogEntry;
use crate::dsl::{self, format_lincomb, SpecFile};
use crate::error::Error;
use crate::metric::{ConstantCurvature, LeftInvariantMetric};
use crate::verify::{
    self, check_expectations, entry_metric, mobius_invariance_check, Check, Status,
    DEFAULT_SEED, DEFAULT_TOL, MOBIUS_SAMPLES,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "holometric", version, about = "Exact checks for complex Lie algebras with holomorphic metrics")]
struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing on success; only the exit code reports the outcome
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FileArg {
    /// A `.liealg` file
    file: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Jacobi identity and form nondegeneracy, then any `[expected]` records
    Validate(FileArg),
    /// Unimodularity, solvability, nilpotency, center and series dimensions
    Invariants(FileArg),
    /// Class of a three-dimensional unimodular algebra
    Classify(FileArg),
    /// Levi-Civita connection table
    Connection(FileArg),
    /// Curvature tensor table
    Curvature(FileArg),
    /// Constant curvature value, or a witness triple that it is not constant
    Constcurv(FileArg),
    /// Isotropy type and invariant-form dimension, plus invariance of a given form
    Model(FileArg),
    /// Run the full verification suite on the built-in catalog
    VerifyPaper {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Numeric Möbius invariance check of dz₁dz₂/(z₁−z₂)²
    MobiusCheck {
        #[arg(long, default_value_t = MOBIUS_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
}

/// Output of a subcommand in both text and JSON form, with its exit code.
struct Outcome {
    lines: Vec<String>,
    json: serde_json::Value,
    code: i32,
}

impl Outcome {
    fn ok(lines: Vec<String>, json: impl Serialize) -> Self {
        Self::new(lines, json, EXIT_OK)
    }

    fn new(lines: Vec<String>, json: impl Serialize, code: i32) -> Self {
        Self {
            lines,
            json: serde_json::to_value(json).expect("output serialises"),
            code,
        }
    }
}

/// Failure reported on stderr with exit code 1.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(outcome) => {
            if !cli.quiet {
                let _ = if cli.json {
                    writeln!(out, "{}", serde_json::to_string_pretty(&outcome.json).expect("json"))
                } else {
                    outcome.lines.iter().try_for_each(|l| writeln!(out, "{l}"))
                };
            }
            outcome.code
        }
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn load(path: &Path) -> Result<SpecFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    dsl::parse(&text).map_err(|e| Failure(format!("{}:{e}", path.display())))
}

fn load_entry(path: &Path) -> Result<CatalogEntry, Failure> {
    Ok(CatalogEntry::from_spec(&load(path)?)?)
}

fn metric_of(entry: &CatalogEntry) -> Result<LeftInvariantMetric, Failure> {
    match entry_metric(entry) {
        Some(m) => Ok(m?),
        None if entry.form.is_none() => Err(Error::MissingForm.into()),
        None => Err(Failure("the complement is not a subalgebra, so the quotient carries no left-invariant metric".into())),
    }
}

fn check_line(c: &Check) -> String {
    let mut line = format!("{} {}", if c.passed() { "PASS" } else { "FAIL" }, c.id);
    if let Some(v) = &c.value {
        line.push_str(&format!(" = {v}"));
    }
    if let Some(w) = &c.witness {
        line.push_str(&format!(" witness {w}"));
    }
    line
}

fn checks_outcome(checks: Vec<Check>) -> Outcome {
    let lines = checks.iter().map(check_line).collect();
    let code = if checks.iter().all(Check::passed) { EXIT_OK } else { EXIT_FAILURE };
    Outcome::new(lines, checks, code)
}

fn execute(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Validate(f) => validate(&f.file),
        Command::Invariants(f) => invariants(&f.file),
        Command::Classify(f) => {
            let class = load(&f.file)?.algebra.classify_3d_unimodular()?;
            Ok(Outcome::ok(vec![class.to_string()], serde_json::json!({ "class": class.to_string() })))
        }
        Command::Connection(f) => connection(&f.file),
        Command::Curvature(f) => curvature(&f.file),
        Command::Constcurv(f) => constcurv(&f.file),
        Command::Model(f) => model(&f.file),
        Command::VerifyPaper { seed, tol } => {
            let report = verify::verify_all(*seed, *tol)?;
            let mut lines: Vec<String> = report.checks.iter().map(check_line).collect();
            lines.push(format!(
                "seed {}: {} passed, {} failed",
                report.seed, report.summary.pass, report.summary.fail
            ));
            let code = if report.all_passed() { EXIT_OK } else { EXIT_FAILURE };
            Ok(Outcome::new(lines, &report, code))
        }
        Command::MobiusCheck { samples, seed, tol } => {
            let o = mobius_invariance_check(*samples, *seed, *tol)?;
            let ok = o.max_residual < *tol;
            let status = if ok { Status::Pass } else { Status::Fail };
            let line = format!(
                "{} max residual {:e} over {} samples (tolerance {tol:e})",
                if ok { "PASS" } else { "FAIL" },
                o.max_residual,
                o.samples
            );
            let json = serde_json::json!({
                "status": status,
                "samples": o.samples,
                "seed": seed,
                "tol": tol,
                "max_residual": o.max_residual,
            });
            Ok(Outcome::new(vec![line], json, if ok { EXIT_OK } else { EXIT_FAILURE }))
        }
    }
}

fn validate(path: &Path) -> Result<Outcome, Failure> {
    let spec = load(path)?;
    let g = &spec.algebra;
    let mut checks = Vec::new();
    let defect = g.jacobi_defect();
    checks.push(Check {
        id: "jacobi".into(),
        status: if defect.is_zero() { Status::Pass } else { Status::Fail },
        witness: g.jacobi_witness().map(|((i, j, k), _)| format!("({i}, {j}, {k})")),
        value: Some(defect.to_string()),
    });
    if let Some(q) = &spec.form {
        let ok = q.is_nondegenerate();
        checks.push(Check {
            id: "form_nondegenerate".into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: None,
            value: Some(q.determinant().to_string()),
        });
    }
    if checks.iter().all(Check::passed) && !spec.expected.is_empty() {
        checks.extend(check_expectations(&CatalogEntry::from_spec(&spec)?));
    }
    Ok(checks_outcome(checks))
}

fn invariants(path: &Path) -> Result<Outcome, Failure> {
    let g = load(path)?.algebra;
    let series = |s: Vec<usize>| s.iter().map(usize::to_string).collect::<Vec<_>>().join(", ");
    let rows: Vec<(&str, serde_json::Value, String)> = vec![
        ("unimodular", g.is_unimodular().into(), g.is_unimodular().to_string()),
        ("solvable", g.is_solvable().into(), g.is_solvable().to_string()),
        ("nilpotent", g.is_nilpotent().into(), g.is_nilpotent().to_string()),
        ("semisimple", g.is_semisimple().into(), g.is_semisimple().to_string()),
        ("center_dim", g.center().len().into(), g.center().len().to_string()),
        ("derived_series", g.derived_series().into(), series(g.derived_series())),
        ("lower_central_series", g.lower_central_series().into(), series(g.lower_central_series())),
    ];
    let lines = rows.iter().map(|(k, _, text)| format!("{k}: {text}")).collect();
    let json: serde_json::Map<String, serde_json::Value> =
        rows.into_iter().map(|(k, v, _)| (k.to_string(), v)).collect();
    Ok(Outcome::ok(lines, json))
}

fn connection(path: &Path) -> Result<Outcome, Failure> {
    let metric = metric_of(&load_entry(path)?)?;
    let names = metric.algebra.names();
    let n = names.len();
    let mut lines = Vec::new();
    let mut table = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = metric.connection.get(i, j);
            let text = format_lincomb(names, &v);
            if text != "0" {
                lines.push(format!("nabla_{} {} = {text}", names[i], names[j]));
            }
            table.push(serde_json::json!({ "x": names[i], "y": names[j], "value": text }));
        }
    }
    if lines.is_empty() {
        lines.push("all components vanish".into());
    }
    Ok(Outcome::ok(lines, table))
}

fn curvature(path: &Path) -> Result<Outcome, Failure> {
    let metric = metric_of(&load_entry(path)?)?;
    let names = metric.algebra.names();
    let n = names.len();
    let mut lines = Vec::new();
    let mut table = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let text = format_lincomb(names, &metric.curvature.get(i, j, k));
                if text != "0" {
                    lines.push(format!("R({},{}){} = {text}", names[i], names[j], names[k]));
                }
                table.push(serde_json::json!({ "x": names[i], "y": names[j], "z": names[k], "value": text }));
            }
        }
    }
    if lines.is_empty() {
        lines.push("flat: all components vanish".into());
    }
    Ok(Outcome::ok(lines, table))
}

fn constcurv(path: &Path) -> Result<Outcome, Failure> {
    let metric = metric_of(&load_entry(path)?)?;
    let cc = metric.constant_curvature()?;
    let (line, json) = match &cc {
        ConstantCurvature::Constant(k) => (
            format!("Constant({k})"),
            serde_json::json!({ "constant": true, "value": k.to_string(), "witness": null }),
        ),
        ConstantCurvature::NotConstant { witness: (i, j, k) } => (
            format!("NotConstant witness ({i}, {j}, {k})"),
            serde_json::json!({ "constant": false, "value": null, "witness": [i, j, k] }),
        ),
    };
    Ok(Outcome::ok(vec![line], json))
}

fn model(path: &Path) -> Result<Outcome, Failure> {
    let entry = load_entry(path)?;
    let m = entry
        .model
        .as_ref()
        .ok_or_else(|| Failure("the file has no [isotropy] section".into()))?;
    let ty = m.isotropy_type()?;
    let forms = m.invariant_forms()?.len();
    let invariance = match m.quotient_form() {
        Some(_) => Some(m.check_invariance()?),
        None => None,
    };
    let lines = vec![
        format!("isotropy_type: {ty}"),
        format!(
            "invariance: {}",
            invariance.map_or("no form given".to_string(), |b| b.to_string())
        ),
        format!("invariant_forms_dim: {forms}"),
    ];
    let json = serde_json::json!({
        "isotropy_type": ty,
        "invariance": invariance,
        "invariant_forms_dim": forms,
    });
    let code = if invariance == Some(false) { EXIT_FAILURE } else { EXIT_OK };
    Ok(Outcome::new(lines, json, code))
}
