//! Argument definitions and the subcommand implementations.

use crate::acceptance;
use crate::error::{CliError, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use coeff_ring::specialization::PresetFile;
use coeff_ring::{default_trunc, CoeffPoly, PSeries, Specialization, TruncSeries};
use formal_group::{check_nilhecke, fgl_log, FormalGroupLaw};
use homology::{build_complex, homology, PdLink};
use prefoam::{eval_deformed_gl2, eval_deformed_gln, eval_exact_gl2, eval_rw, eval_specialized_gl2, eval_trivial_p, parse_foam, FoamFile};
use serde_json::{json, Value};
use skein::{verify_all, RelationId};
use std::fmt::Write;
use std::path::{Path, PathBuf};
use webs::corpus::named_webs;
use webs::{foam_map_matrix, linalg, moy_rank, state_space_basis, FoamMovie, Web};

#[derive(Parser, Debug)]
#[command(name = "foamcalc", version, about = "Exact foam evaluation, formal group laws, web state spaces and link homology")]
pub struct Cli {
    /// Worker threads (defaults to the available cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Deformed evaluation of a closed foam as a truncated power series.
    Eval(EvalArgs),
    /// Exact GL(2) value in the ground ring, optionally specialized to Z.
    EvalExact(EvalExactArgs),
    /// GL(N) evaluation, deformed or undeformed.
    EvalGln(EvalGlnArgs),
    /// Verify skein relations on their closure families.
    Skein(SkeinArgs),
    /// Formal group laws: coefficients, q series, logarithm and checks.
    Fgl(FglArgs),
    /// Web state spaces and foam maps.
    Web(WebArgs),
    /// Bigraded homology of a link diagram.
    Homology(HomologyArgs),
    /// Run the acceptance suite.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Tsv,
    Json,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[arg(long)]
    pub foam: PathBuf,
    /// trivial, generic, multiplicative, or a preset JSON file.
    #[arg(long, default_value = "generic")]
    pub p: String,
    /// Truncation degree (default from FOAMCALC_TRUNC, else 16).
    #[arg(long)]
    pub trunc: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct EvalExactArgs {
    #[arg(long)]
    pub foam: PathBuf,
    /// khovanov, mult, or a preset JSON file.
    #[arg(long)]
    pub preset: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Undeformed {
    /// The undeformed sign convention.
    Rw,
    /// The deformed formula at p = 1.
    Trivial,
}

#[derive(Args, Debug)]
pub struct EvalGlnArgs {
    #[arg(long)]
    pub foam: PathBuf,
    #[arg(long, default_value = "generic")]
    pub p: String,
    #[arg(long)]
    pub trunc: Option<u32>,
    /// Evaluate without deformation instead.
    #[arg(long, value_enum)]
    pub undeformed: Option<Undeformed>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SkeinArgs {
    /// `all` or a relation id such as NeckCut.
    #[arg(long, default_value = "all")]
    pub suite: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Law {
    Additive,
    Multiplicative,
    Lorentz,
    Universal,
}

impl Law {
    fn name(self) -> &'static str {
        match self {
            Law::Additive => "additive",
            Law::Multiplicative => "multiplicative",
            Law::Lorentz => "lorentz",
            Law::Universal => "universal",
        }
    }
}

#[derive(Args, Debug)]
pub struct FglArgs {
    #[arg(long, value_enum)]
    pub law: Law,
    #[arg(long)]
    pub trunc: Option<u32>,
    /// Also check the axioms and the nilHecke relations.
    #[arg(long)]
    pub checks: bool,
    /// Number of variables for the nilHecke checks (2 to 4).
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(2..=4))]
    pub strands: u32,
    #[arg(long, value_enum, default_value = "json")]
    pub format: TableFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WebAction {
    Rank,
    Basis,
    Gram,
    Map,
}

#[derive(Args, Debug)]
pub struct WebArgs {
    #[arg(value_enum)]
    pub action: WebAction,
    /// Web JSON file.
    #[arg(long, conflicts_with = "named")]
    pub web: Option<PathBuf>,
    /// One of the built-in webs (circle, theta, figure, ...).
    #[arg(long)]
    pub named: Option<String>,
    /// Movie JSON file, for `map`.
    #[arg(long)]
    pub movie: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct HomologyArgs {
    /// A PD code such as `X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]`, or a file holding one.
    #[arg(long)]
    pub pd: String,
    /// khovanov, mult, or a preset JSON file.
    #[arg(long, default_value = "khovanov")]
    pub preset: String,
    /// Write the table here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: TableFormat,
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    /// Only these criteria.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<u32>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

/// What a command produced.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    /// Echo of the effective configuration, one `key=value` per entry.
    pub config: Vec<(String, String)>,
    /// Set when the command ran but its checks failed.
    pub failed: bool,
}

impl Output {
    pub fn header(&self, sub: &str) -> String {
        let mut s = format!("# foamcalc {sub}");
        for (k, v) in &self.config {
            let _ = write!(s, " {k}={v}");
        }
        s
    }
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Eval(_) => "eval",
            Command::EvalExact(_) => "eval-exact",
            Command::EvalGln(_) => "eval-gln",
            Command::Skein(_) => "skein",
            Command::Fgl(_) => "fgl",
            Command::Web(_) => "web",
            Command::Homology(_) => "homology",
            Command::Selftest(_) => "selftest",
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), msg: e.to_string() })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn read_preset(path: &str) -> Result<PresetFile> {
    let text = read(Path::new(path))?;
    Ok(serde_json::from_str(&text)?)
}

/// p = 1 + b0_1 y with b0_1 symbolic: the multiplicative law's series
/// 1 - beta y, written with b0_1 = -beta.
fn multiplicative_p() -> PSeries {
    let mut s = TruncSeries::one(2, 4096);
    s.add_term(vec![0, 1], CoeffPoly::var(0, 1));
    PSeries::Explicit(s)
}

fn p_series(name: &str) -> Result<PSeries> {
    Ok(match name {
        "trivial" => PSeries::trivial(),
        "generic" => PSeries::Generic,
        "multiplicative" | "mult" => multiplicative_p(),
        path => Specialization::from_preset(&read_preset(path)?).p(),
    })
}

fn specialization(name: &str) -> Result<Specialization> {
    match Specialization::by_name(name) {
        Some(s) => Ok(s),
        None => Ok(Specialization::from_preset(&read_preset(name)?)),
    }
}

fn series_out(v: &TruncSeries, format: Format) -> String {
    match format {
        Format::Text => format!("{v}\n"),
        Format::Json => pretty(&v.to_json()),
    }
}

pub fn run(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Eval(a) => eval(a),
        Command::EvalExact(a) => eval_exact(a),
        Command::EvalGln(a) => eval_gln(a),
        Command::Skein(a) => skein(a),
        Command::Fgl(a) => fgl(a),
        Command::Web(a) => web(a),
        Command::Homology(a) => homology_cmd(a),
        Command::Selftest(a) => selftest(a),
    }
}

fn eval(a: &EvalArgs) -> Result<Output> {
    let d = a.trunc.unwrap_or_else(default_trunc);
    let p = p_series(&a.p)?;
    let v = match parse_foam(&read(&a.foam)?)? {
        FoamFile::Gl2(f) => eval_deformed_gl2(&f, &p, d)?,
        FoamFile::GlN(f) => eval_deformed_gln(&f, &p, d)?,
    };
    Ok(Output {
        stdout: series_out(&v, a.format),
        config: vec![("foam".into(), a.foam.display().to_string()), ("p".into(), a.p.clone()), ("trunc".into(), d.to_string())],
        failed: false,
    })
}

fn eval_exact(a: &EvalExactArgs) -> Result<Output> {
    let FoamFile::Gl2(f) = parse_foam(&read(&a.foam)?)? else {
        return Err(CliError::Usage("eval-exact needs a gl2_prefoam".into()));
    };
    let mut config = vec![("foam".into(), a.foam.display().to_string())];
    let stdout = match &a.preset {
        Some(name) => {
            let s = specialization(name)?;
            config.push(("preset".into(), name.clone()));
            let v = eval_specialized_gl2(&f, s.target()?)?;
            match a.format {
                Format::Text => format!("{v}\n"),
                Format::Json => pretty(&json!({"preset": s.name, "value": v.to_string()})),
            }
        }
        None => {
            let v = eval_exact_gl2(&f)?;
            match a.format {
                Format::Text => format!("{v}\n"),
                Format::Json => pretty(&json!({"value": v.to_string(), "terms": v.to_json()})),
            }
        }
    };
    Ok(Output { stdout, config, failed: false })
}

fn eval_gln(a: &EvalGlnArgs) -> Result<Output> {
    let f = match parse_foam(&read(&a.foam)?)? {
        FoamFile::Gl2(f) => f.to_gln(),
        FoamFile::GlN(f) => f,
    };
    let mut config = vec![("foam".into(), a.foam.display().to_string())];
    let v = match a.undeformed {
        Some(Undeformed::Rw) => {
            config.push(("undeformed".into(), "rw".into()));
            eval_rw(&f)?
        }
        Some(Undeformed::Trivial) => {
            config.push(("undeformed".into(), "trivial".into()));
            eval_trivial_p(&f)?
        }
        None => {
            let d = a.trunc.unwrap_or_else(default_trunc);
            config.push(("p".into(), a.p.clone()));
            config.push(("trunc".into(), d.to_string()));
            eval_deformed_gln(&f, &p_series(&a.p)?, d)?
        }
    };
    config.push(("N".into(), f.n.to_string()));
    Ok(Output { stdout: series_out(&v, a.format), config, failed: false })
}

fn skein(a: &SkeinArgs) -> Result<Output> {
    let ids: Vec<RelationId> = if a.suite == "all" { RelationId::ALL.to_vec() } else { vec![RelationId::parse(&a.suite)?] };
    let reports = verify_all(&ids)?;
    let passed = reports.iter().all(|r| r.passed());
    let v = json!({
        "passed": passed,
        "relations": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
    });
    Ok(Output { stdout: pretty(&v), config: vec![("suite".into(), a.suite.clone())], failed: !passed })
}

fn fgl(a: &FglArgs) -> Result<Output> {
    let d = a.trunc.unwrap_or_else(default_trunc);
    let law = FormalGroupLaw::by_name(a.law.name(), d)?;
    let mut config = vec![("law".into(), a.law.name().to_string()), ("trunc".into(), d.to_string())];
    let mut failed = false;
    let mut checks = Vec::new();
    if a.checks {
        config.push(("strands".into(), a.strands.to_string()));
        let axioms = law.check_axioms(d);
        failed |= axioms.is_err();
        checks.push(json!({"check": "axioms", "passed": axioms.is_ok(), "failure": axioms.err().map(|e| e.to_string())}));
        let r = check_nilhecke(&law, a.strands as usize, d)?;
        failed |= !r.all_passed();
        checks.push(r.to_json());
    }
    let stdout = match a.format {
        TableFormat::Json => {
            let q = law.q_series(d)?;
            let log = fgl_log(&law, d)?;
            let log_coeffs: Vec<Value> = (1..=log.valid())
                .map(|n| {
                    let (num, den) = log.coeff(n);
                    json!([n, num.to_string(), den.to_string()])
                })
                .collect();
            let mut v = json!({"law": law.to_json(), "q": q.to_json(), "log": log_coeffs});
            if a.checks {
                v["checks"] = Value::Array(checks);
            }
            pretty(&v)
        }
        TableFormat::Tsv => {
            let mut s = String::from("i\tj\tcoeff\n");
            for (&(i, j), c) in law.coeffs() {
                let _ = writeln!(s, "{i}\t{j}\t{c}");
            }
            if a.checks {
                s.push_str("# check\tpassed\n");
                for c in &checks {
                    for (name, ok) in check_rows(c) {
                        let _ = writeln!(s, "# {name}\t{ok}");
                    }
                }
            }
            s
        }
    };
    Ok(Output { stdout, config, failed })
}

fn check_rows(v: &Value) -> Vec<(String, bool)> {
    match v.get("checks").and_then(Value::as_array) {
        Some(list) => list
            .iter()
            .map(|c| (c["check"].as_str().unwrap_or("").to_string(), c["passed"].as_bool().unwrap_or(false)))
            .collect(),
        None => vec![(v["check"].as_str().unwrap_or("").to_string(), v["passed"].as_bool().unwrap_or(false))],
    }
}

fn load_web(a: &WebArgs) -> Result<(String, Web)> {
    if let Some(path) = &a.web {
        return Ok((path.display().to_string(), Web::parse(&read(path)?)?));
    }
    if let Some(name) = &a.named {
        return named_webs()
            .into_iter()
            .find(|(n, _)| n == name)
            .map(|(n, w)| (n.to_string(), w))
            .ok_or_else(|| CliError::Usage(format!("unknown web '{name}'")));
    }
    Err(CliError::Usage("give --web or --named".into()))
}

fn web(a: &WebArgs) -> Result<Output> {
    let mut config = vec![("action".into(), format!("{:?}", a.action).to_lowercase())];
    let v = if a.action == WebAction::Map {
        let path = a.movie.as_ref().ok_or_else(|| CliError::Usage("map needs --movie".into()))?;
        config.push(("movie".into(), path.display().to_string()));
        let m = FoamMovie::parse(&read(path)?)?;
        let dom = state_space_basis(&m.start)?;
        let cod = state_space_basis(&m.end()?)?;
        let mat = foam_map_matrix(&m, &dom, &cod)?;
        json!({"degree": m.degree(), "rows": cod.rank(), "cols": dom.rank(), "matrix": linalg::to_json(&mat)})
    } else {
        let (name, w) = load_web(a)?;
        config.push(("web".into(), name));
        let s = state_space_basis(&w)?;
        match a.action {
            WebAction::Rank => json!({
                "rank": s.rank(),
                "graded_rank": s.graded_rank().to_string(),
                "moy_rank": moy_rank(&w)?.to_string(),
                "thin_components": w.thin_components(),
            }),
            WebAction::Basis => s.to_json(),
            _ => json!({"gram": linalg::to_json(&s.gram), "det": s.gram_det()?.to_string()}),
        }
    };
    Ok(Output { stdout: pretty(&v), config, failed: false })
}

fn load_pd(arg: &str) -> Result<PdLink> {
    let path = Path::new(arg);
    let text = if path.is_file() { read(path)? } else { arg.to_string() };
    Ok(PdLink::parse(&text)?)
}

fn homology_cmd(a: &HomologyArgs) -> Result<Output> {
    let pd = load_pd(&a.pd)?;
    let s = specialization(&a.preset)?;
    let t = homology(&build_complex(&pd, &s)?)?;
    let text = match a.format {
        TableFormat::Tsv => t.to_tsv(),
        TableFormat::Json => pretty(&t.to_json()),
    };
    let mut config = vec![("pd".into(), pd.to_string()), ("preset".into(), s.name.clone())];
    let stdout = match &a.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| CliError::Io { path: path.display().to_string(), msg: e.to_string() })?;
            config.push(("out".into(), path.display().to_string()));
            String::new()
        }
        None => text,
    };
    Ok(Output { stdout, config, failed: false })
}

fn selftest(a: &SelftestArgs) -> Result<Output> {
    if let Some(bad) = a.only.iter().find(|&&i| !(1..=10).contains(&i)) {
        return Err(CliError::Usage(format!("no criterion {bad}")));
    }
    let outcomes = acceptance::run(&a.only);
    let failed = outcomes.iter().any(|o| !o.passed);
    let stdout = match a.format {
        Format::Text => outcomes.iter().map(|o| o.line() + "\n").collect(),
        Format::Json => pretty(&Value::Array(outcomes.iter().map(|o| o.to_json()).collect())),
    };
    let only = if a.only.is_empty() { "all".into() } else { a.only.iter().map(u32::to_string).collect::<Vec<_>>().join(",") };
    Ok(Output { stdout, config: vec![("only".into(), only)], failed })
}
