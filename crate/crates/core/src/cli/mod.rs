//! Command-line front end.  `run` takes the argument list and returns the
//! exit code with captured standard output and error, so the binary is a
//! thin wrapper and everything is testable in-process.
//!
//! Exit codes: 0 success, 1 assertion failure, 2 usage error, 3 more input
//! needed (`classify --j 1728`).

mod fixtures;
mod verify;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::arith::{parse_poly, parse_rational};
use crate::classify::{classify_curve, classify_j, export_table1_json, mc_s3_filter, ClassifyError};
use crate::group::{
    close, enumerate_subgroups, gl2, is_generalized_s3_type, parse_gens, EnumerationOptions, GroupSpec, ModMatrix,
    Subgroup, TableGroup, table_is_s3_type,
};
use crate::modcurve::psl2_invariants;

pub use fixtures::{ingest_fixtures, parse_curve, FixtureCurve, FixtureError, FixtureSet};
pub use verify::{default_fixture_path, random_height, registry_names, run_check, CheckReport, VerifyContext, AUX_CURVES, NAMED_J, REGISTRY};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NEEDS_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cubic-torsion", about = "Torsion of rational elliptic curves over Q(3^inf)")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify from a j-invariant, a curve, or every curve of a fixture file.
    Classify(ClassifyArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// Congruence-subgroup invariants of a matrix group.
    Genus(GroupArgs),
    /// Enumerate subgroup classes of GL2(Z/n) or of a given group.
    GroupsEnum(EnumArgs),
    /// Monte Carlo S3 filter on a polynomial in x.
    Filter(FilterArgs),
    /// Write the table of parameterizations as JSON.
    ExportTable1 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parse and validate a fixture file.
    Ingest {
        #[arg(long)]
        fixtures: PathBuf,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct ClassifyInput {
    #[arg(long, allow_hyphen_values = true)]
    j: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    curve: Option<String>,
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    input: ClassifyInput,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    check: String,
    #[arg(long)]
    budget_minutes: Option<f64>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GroupArgs {
    #[arg(long)]
    modulus: u32,
    #[arg(long, allow_hyphen_values = true)]
    gens: String,
}

#[derive(Args, Debug)]
struct EnumArgs {
    #[arg(long)]
    modulus: u32,
    /// Ambient group; defaults to all of GL2(Z/n).
    #[arg(long, allow_hyphen_values = true)]
    gens: Option<String>,
    /// Keep only subgroups of generalized S3-type.
    #[arg(long)]
    s3_only: bool,
    /// List every subgroup instead of one per conjugacy class.
    #[arg(long)]
    all: bool,
    #[arg(long)]
    budget_minutes: Option<f64>,
}

#[derive(Args, Debug)]
struct FilterArgs {
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    #[arg(long, default_value_t = 30)]
    trials: usize,
    #[arg(long)]
    seed: u64,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn json<T: Serialize>(v: &T) -> Self {
        Outcome { code: EXIT_OK, stdout: serde_json::to_string_pretty(v).unwrap() + "\n", stderr: String::new() }
    }
    fn err(code: i32, msg: impl Into<String>) -> Self {
        let mut m = msg.into();
        if !m.ends_with('\n') {
            m.push('\n');
        }
        Outcome { code, stdout: String::new(), stderr: m }
    }
}

fn deadline(minutes: Option<f64>) -> Option<Instant> {
    minutes.map(|m| Instant::now() + Duration::from_secs_f64(m.max(0.0) * 60.0))
}

/// `args[0]` is the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome::err(code, text)
            };
        }
    };
    match cli.cmd {
        Command::Classify(a) => cmd_classify(a.input),
        Command::Verify(a) => cmd_verify(a),
        Command::Genus(a) => cmd_genus(a),
        Command::GroupsEnum(a) => cmd_enum(a),
        Command::Filter(a) => cmd_filter(a),
        Command::ExportTable1 { out } => cmd_export(out),
        Command::Ingest { fixtures } => cmd_ingest(fixtures),
    }
}

fn classify_error(e: ClassifyError) -> Outcome {
    match e {
        ClassifyError::CurveRequired => Outcome::err(EXIT_NEEDS_INPUT, e.to_string()),
        ClassifyError::Curve(_) => Outcome::err(EXIT_USAGE, e.to_string()),
        _ => Outcome::err(EXIT_FAIL, e.to_string()),
    }
}

fn cmd_classify(input: ClassifyInput) -> Outcome {
    if let Some(j) = input.j {
        return match parse_rational(&j) {
            Err(e) => Outcome::err(EXIT_USAGE, e.to_string()),
            Ok(j) => classify_j(&j).map_or_else(classify_error, |r| Outcome::json(&r)),
        };
    }
    if let Some(c) = input.curve {
        return match parse_curve(&c) {
            Err(e) => Outcome::err(EXIT_USAGE, format!("invalid curve: {e}")),
            Ok(e) => classify_curve(&e).map_or_else(classify_error, |r| Outcome::json(&r)),
        };
    }
    let path = input.fixtures.expect("clap enforces one input");
    let (set, warnings) = match ingest_fixtures(&path) {
        Ok(s) => s,
        Err(e) => return Outcome::err(EXIT_USAGE, e.to_string()),
    };
    #[derive(Serialize)]
    struct Labelled {
        label: String,
        #[serde(flatten)]
        result: crate::classify::ClassificationResult,
    }
    let mut out = Vec::new();
    for (label, e) in &set.curves {
        match classify_curve(e) {
            Ok(result) => out.push(Labelled { label: label.clone(), result }),
            Err(err) => return classify_error(err),
        }
    }
    let mut o = Outcome::json(&out);
    o.stderr = warnings.join("\n");
    o
}

fn cmd_verify(a: VerifyArgs) -> Outcome {
    let ctx = VerifyContext { deadline: deadline(a.budget_minutes), seed: a.seed, fixtures: a.fixtures };
    let Some(report) = run_check(&a.check, &ctx) else {
        return Outcome::err(
            EXIT_USAGE,
            format!("unknown check {:?}; available: {}", a.check, registry_names().join(", ")),
        );
    };
    let mut o = Outcome::json(&report);
    o.stderr = format!("{}: {}\n", report.name, if report.passed { "pass" } else { "FAIL" });
    if !report.passed {
        o.code = EXIT_FAIL;
    }
    o
}

fn build_group(modulus: u32, gens: &str) -> Result<crate::group::MatrixGroup, Outcome> {
    let g = parse_gens(gens, modulus).map_err(|e| Outcome::err(EXIT_USAGE, e.to_string()))?;
    close(&g, modulus).map_err(|e| Outcome::err(EXIT_USAGE, e.to_string()))
}

fn cmd_genus(a: GroupArgs) -> Outcome {
    let g = match build_group(a.modulus, &a.gens) {
        Ok(g) => g,
        Err(o) => return o,
    };
    psl2_invariants(&g).map_or_else(|e| Outcome::err(EXIT_USAGE, e.to_string()), |c| Outcome::json(&c))
}

/// One enumerated subgroup.
#[derive(Serialize, serde::Deserialize, Debug, PartialEq, Eq)]
pub struct EnumeratedGroup {
    pub order: usize,
    pub s3_type: bool,
    pub group: GroupSpec,
}

fn cmd_enum(a: EnumArgs) -> Outcome {
    let ambient = match &a.gens {
        Some(s) => match build_group(a.modulus, s) {
            Ok(g) => g,
            Err(o) => return o,
        },
        None if (2..=12).contains(&a.modulus) => gl2(a.modulus),
        None => return Outcome::err(EXIT_USAGE, "GL2(Z/n) enumeration needs 2 <= n <= 12; pass --gens"),
    };
    let pred = |t: &TableGroup<ModMatrix>, s: &Subgroup| table_is_s3_type(t, s);
    let opts = EnumerationOptions {
        hereditary: if a.s3_only { Some(&pred) } else { None },
        filter: None,
        up_to_conjugacy: !a.all,
        deadline: deadline(a.budget_minutes),
    };
    match enumerate_subgroups(&ambient, &opts) {
        Err(e) => Outcome::err(EXIT_FAIL, e.to_string()),
        Ok(groups) => {
            let out: Vec<EnumeratedGroup> = groups
                .iter()
                .map(|g| EnumeratedGroup { order: g.order(), s3_type: is_generalized_s3_type(g), group: GroupSpec::of(g) })
                .collect();
            let mut o = Outcome::json(&out);
            o.stderr = format!("{} groups\n", out.len());
            o
        }
    }
}

fn cmd_filter(a: FilterArgs) -> Outcome {
    if a.trials == 0 {
        return Outcome::err(EXIT_USAGE, "--trials must be at least 1");
    }
    let g = match parse_poly(&a.poly, 'x') {
        Ok(g) => g,
        Err(e) => return Outcome::err(EXIT_USAGE, e.to_string()),
    };
    mc_s3_filter(&g, a.trials, a.seed).map_or_else(|e| Outcome::err(EXIT_USAGE, e.to_string()), |r| Outcome::json(&r))
}

fn cmd_export(out: Option<PathBuf>) -> Outcome {
    let json = export_table1_json() + "\n";
    match out {
        None => Outcome { code: EXIT_OK, stdout: json, stderr: String::new() },
        Some(p) => match std::fs::write(&p, json) {
            Ok(()) => Outcome { code: EXIT_OK, stdout: String::new(), stderr: format!("wrote {}\n", p.display()) },
            Err(e) => Outcome::err(EXIT_FAIL, format!("{}: {e}", p.display())),
        },
    }
}

fn cmd_ingest(path: PathBuf) -> Outcome {
    match ingest_fixtures(&path) {
        Err(e) => Outcome::err(EXIT_USAGE, e.to_string()),
        Ok((set, warnings)) => {
            let out: Vec<FixtureCurve> = set.curves.iter().map(|(l, e)| FixtureCurve::of(l, e)).collect();
            let mut o = Outcome::json(&out);
            o.stderr = warnings.join("\n");
            o
        }
    }
}
