//! The `lieosc` command line.
//!
//! Every subcommand produces a JSON value and a text rendering of it;
//! `--json` prints `{"command": ..., "result": ...}` instead of the text.

use crate::chevmod::{build_chevalley, build_module, verify_prop_d, Condition, IrrepModule};
use crate::classify::{self, CompositeContext, HermitianPairData};
use crate::dadok::k_invariant;
use crate::descriptor::RepDescriptor;
use crate::error::{Error, Result};
use crate::golden::DataDir;
use crate::osc::{self, describe};
use crate::rootsys::{fmt_theta, LieType, RootDatum, Weight};
use crate::sorth::{build_sorth, verify_sorth};
use crate::verify::{self, TableCheck};
use crate::weights::{decomposition_count, weight_system};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DIM_CAP: i32 = 3;
/// Missing data files, structural surprises and other runtime failures.
pub const EXIT_RUNTIME: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "lieosc", version, about = "Exact computations for compact Lie group representations")]
pub struct Cli {
    /// Print a JSON envelope instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest module dimension built explicitly.
    #[arg(long, global = true, default_value_t = 4000)]
    pub dim_cap: u64,
    /// Largest semisimple rank enumerated by the classifiers.
    #[arg(long, global = true, default_value_t = 8)]
    pub rank_cap: usize,
    /// Directory holding the reference tables (falls back to LIEOSC_DATA_DIR).
    #[arg(long, global = true)]
    pub data_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots in θ-coordinates.
    Roots { ty: LieType },
    /// Maximal strongly orthogonal set with its checks.
    Sorth { ty: LieType },
    /// Dadok's k with its per-root parts.
    K { rep: RepDescriptor },
    /// Real, quaternionic or complex.
    Type { rep: RepDescriptor },
    /// Weyl dimension.
    Dim { rep: RepDescriptor },
    /// Weight multiplicities (dominant ones unless --weight is given).
    Mult {
        rep: RepDescriptor,
        /// Dynkin labels `[m1,...]` or a θ-expression.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Ways to write a vector as a root or a sum of two roots.
    Nsum {
        ty: LieType,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "weight")]
        theta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// A span condition on the module: c2, c1half, c1, chalf, uk (with --mu
    /// and --level) or c2mu (with --mu).
    Check {
        rep: RepDescriptor,
        #[arg(long)]
        cond: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long)]
        level: Option<usize>,
    },
    /// Checks that the B-monomial of exponents n_i reaches the lowest weight vector.
    PropD { rep: RepDescriptor },
    /// Transitivity on the unit sphere.
    Transitive { rep: RepDescriptor },
    /// Runs one of the classifiers.
    Classify { what: ClassifyTarget },
    /// Prints a computed table, or diffs it against the reference data with --verify.
    Tables {
        #[arg(long)]
        which: TableName,
        #[arg(long)]
        verify: bool,
    },
    /// Circle redundancy and Γ-orthogonality: the shipped cases, or one
    /// ambient type and node.
    Hermitian {
        #[arg(long, requires = "node")]
        ambient: Option<LieType>,
        #[arg(long, requires = "ambient")]
        node: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassifyTarget {
    Simple,
    Composite,
    K4,
    Ctables,
    Bms,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableName {
    /// Strongly orthogonal sets.
    A,
    /// k of fundamental weights.
    B1,
    /// Composite candidates.
    C,
    K4,
    Simple,
    #[value(alias = "chalf")]
    Ctables,
    Bms,
    Hermitian,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Roots { .. } => "roots",
            Command::Sorth { .. } => "sorth",
            Command::K { .. } => "k",
            Command::Type { .. } => "type",
            Command::Dim { .. } => "dim",
            Command::Mult { .. } => "mult",
            Command::Nsum { .. } => "nsum",
            Command::Check { .. } => "check",
            Command::PropD { .. } => "prop-d",
            Command::Transitive { .. } => "transitive",
            Command::Classify { .. } => "classify",
            Command::Tables { .. } => "tables",
            Command::Hermitian { .. } => "hermitian",
        }
    }
}

struct Output {
    result: Value,
    text: String,
    exit: i32,
}

impl Output {
    fn ok(result: Value, text: String) -> Self {
        Output { result, text, exit: EXIT_OK }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::NotDominant(_) | Error::InvalidRank { .. } | Error::NotAWeight(_) => EXIT_PARSE,
        Error::DimCapExceeded { .. } | Error::WeightCapExceeded { .. } => EXIT_DIM_CAP,
        _ => EXIT_RUNTIME,
    }
}

/// Entry point for the binary.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (program name first) and writes the result to `out`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let name = cli.command.name();
    match execute(&cli) {
        Ok(o) => {
            let shown = if cli.json {
                serde_json::to_string_pretty(&json!({ "command": name, "result": o.result })).expect("serializable")
            } else {
                o.text.trim_end().to_string()
            };
            let _ = writeln!(out, "{shown}");
            o.exit
        }
        Err(e) => {
            if cli.json {
                let _ = writeln!(out, "{}", json!({ "command": name, "error": e.to_string() }));
            }
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn execute(cli: &Cli) -> Result<Output> {
    let dir = DataDir::resolve(cli.data_dir.as_deref());
    match &cli.command {
        Command::Roots { ty } => roots(*ty),
        Command::Sorth { ty } => sorth(*ty),
        Command::K { rep } => k_value(rep),
        Command::Type { rep } => {
            let info = describe(rep)?;
            let text = format!("{rep}: {}", info.repr_type);
            Ok(Output::ok(json!({ "rep": rep, "repr_type": info.repr_type, "semisimple_type": info.semisimple_type }), text))
        }
        Command::Dim { rep } => {
            let info = describe(rep)?;
            Ok(Output::ok(json!({ "rep": rep, "dim": info.dim }), info.dim.to_string()))
        }
        Command::Mult { rep, weight } => mult(rep, weight.as_deref(), cli.dim_cap),
        Command::Nsum { ty, theta, weight } => nsum(*ty, theta.as_deref(), weight.as_deref()),
        Command::Check { rep, cond, mu, level } => check(rep, cond, mu.as_deref(), *level, cli.dim_cap),
        Command::PropD { rep } => prop_d(rep, cli.dim_cap),
        Command::Transitive { rep } => {
            let t = osc::descriptor_transitive(rep, cli.dim_cap)?;
            let text = format!("{rep}: {}", if t { "transitive on the sphere" } else { "not transitive" });
            Ok(Output::ok(json!({ "rep": rep, "transitive": t }), text))
        }
        Command::Classify { what } => classify_cmd(*what, cli, &dir),
        Command::Tables { which, verify } => tables(*which, *verify, cli, &dir),
        Command::Hermitian { ambient, node } => hermitian(*ambient, *node, &dir),
    }
}

fn parse_weight(d: &RootDatum, s: &str) -> Result<Weight> {
    let w = if s.trim_start().starts_with('[') { s.parse::<Weight>()? } else { d.parse_weight_theta(s)? };
    if w.rank() != d.rank() {
        return Err(Error::Parse(format!("`{s}` has {} labels, expected {}", w.rank(), d.rank())));
    }
    Ok(w)
}

fn module_of(rep: &RepDescriptor, dim_cap: u64) -> Result<IrrepModule> {
    let (d, lambda) = rep.datum_and_weight()?;
    build_module(&build_chevalley(&d), &lambda, dim_cap)
}

fn roots(ty: LieType) -> Result<Output> {
    let d = RootDatum::new(ty);
    let theta: Vec<String> = d.positive_roots().iter().map(|r| fmt_theta(&d.root_to_theta(r))).collect();
    let highest = fmt_theta(&d.root_to_theta(&d.highest_root()));
    let mut text = format!("{ty}: {} positive roots, highest {highest}\n", theta.len());
    for (r, t) in d.positive_roots().iter().zip(&theta) {
        text.push_str(&format!("  {:<20} {t}\n", format!("{:?}", r.0)));
    }
    let result = json!({
        "type": ty.to_string(),
        "cartan": d.cartan(),
        "positive_roots": d.positive_roots().iter().map(|r| &r.0).collect::<Vec<_>>(),
        "theta": theta,
        "highest_root": highest,
    });
    Ok(Output::ok(result, text))
}

fn sorth(ty: LieType) -> Result<Output> {
    let d = RootDatum::new(ty);
    let b = build_sorth(&d)?;
    let report = verify_sorth(&d, &b);
    let theta: Vec<String> = b.betas.iter().map(|r| fmt_theta(&d.root_to_theta(r))).collect();
    let text = format!(
        "{ty}: B = {{{}}}\n  strongly orthogonal and sends ρ to −ρ: {}",
        theta.join(", "),
        report.valid()
    );
    let result = json!({ "type": ty.to_string(), "betas": theta, "provenance": b.provenance, "report": report, "valid": report.valid() });
    Ok(Output::ok(result, text))
}

fn k_value(rep: &RepDescriptor) -> Result<Output> {
    let info = describe(rep)?;
    let (d, lambda) = rep.datum_and_weight()?;
    let kv = k_invariant(&d, &build_sorth(&d)?, &lambda);
    let parts: Vec<String> = kv.n_parts.iter().map(ToString::to_string).collect();
    let text = format!("{rep}: k={}, {}\n  n_i = [{}]", kv.k, info.repr_type, parts.join(", "));
    let result = json!({ "rep": rep, "k": kv, "repr_type": info.repr_type, "dim": info.dim });
    Ok(Output::ok(result, text))
}

fn mult(rep: &RepDescriptor, weight: Option<&str>, dim_cap: u64) -> Result<Output> {
    let (d, lambda) = rep.datum_and_weight()?;
    let ws = weight_system(&d, &lambda, dim_cap.max(osc::FILTER_DIM_CAP))?;
    match weight {
        Some(s) => {
            let w = parse_weight(&d, s)?;
            let m = ws.mult(&d, &w);
            Ok(Output::ok(json!({ "rep": rep, "weight": w, "mult": m }), format!("mult {w} = {m}")))
        }
        None => {
            let mut text = format!("{rep}: dim {}\n", ws.total_dim);
            for (w, m) in &ws.dominant_mults {
                text.push_str(&format!("  {w} ({}): {m}\n", fmt_theta(&d.weight_to_theta(w))));
            }
            let mut result = ws.to_json(&d);
            result["rep"] = to_value(rep);
            Ok(Output::ok(result, text))
        }
    }
}

fn nsum(ty: LieType, theta: Option<&str>, weight: Option<&str>) -> Result<Output> {
    let d = RootDatum::new(ty);
    let v = match (theta, weight) {
        (Some(t), _) => d.parse_weight_theta(t)?,
        (None, Some(w)) => parse_weight(&d, w)?,
        (None, None) => return Err(Error::Parse("nsum needs --theta or --weight".into())),
    };
    let count = decomposition_count(&d, &v);
    let ways = count.describe(&d);
    let mut text = format!("N={}\n", count.n);
    for w in &ways {
        text.push_str(&format!("  {w}\n"));
    }
    let result = json!({ "type": ty.to_string(), "vector": fmt_theta(&d.weight_to_theta(&v)), "n": count.n, "ways": ways });
    Ok(Output::ok(result, text))
}

fn check(rep: &RepDescriptor, cond: &str, mu: Option<&str>, level: Option<usize>, dim_cap: u64) -> Result<Output> {
    let m = module_of(rep, dim_cap)?;
    let d = m.datum();
    let need_mu = || mu.ok_or_else(|| Error::Parse(format!("condition {cond} needs --mu"))).and_then(|s| parse_weight(d, s));
    let (label, holds, witness) = match cond.to_ascii_lowercase().as_str() {
        "c2mu" => {
            let v = osc::c2_mu_filter(&m, &need_mu()?)?;
            ("c2mu".to_string(), v.passed, to_value(&v.witness))
        }
        "uk" => {
            let level = level.ok_or_else(|| Error::Parse("condition uk needs --level".into()))?;
            let r = m.check_condition(&Condition::UkFrom { mu: need_mu()?, level })?;
            (format!("U^{level} from μ"), r.holds, to_value(&r.witness))
        }
        other => {
            let c: Condition = other.parse()?;
            let r = m.check_condition(&c)?;
            (format!("{c:?}"), r.holds, to_value(&r.witness))
        }
    };
    let mut text = format!("{rep}: {label} {}\n", if holds { "holds" } else { "fails" });
    if !witness.is_null() {
        text.push_str(&format!("  witness: {witness}\n"));
    }
    Ok(Output::ok(json!({ "rep": rep, "condition": label, "holds": holds, "witness": witness }), text))
}

fn prop_d(rep: &RepDescriptor, dim_cap: u64) -> Result<Output> {
    let m = module_of(rep, dim_cap)?;
    let b = build_sorth(m.datum())?;
    let kv = k_invariant(m.datum(), &b, &m.highest);
    let report = verify_prop_d(&m, &b, &kv)?;
    let text = format!(
        "{rep}: k={}, exponents {:?}\n  monomial nonzero: {}\n  proportional to lowest: {}\n  confirmed: {}",
        report.k,
        report.exponents,
        report.monomial_nonzero,
        report.proportional_to_lowest,
        report.confirmed()
    );
    Ok(Output::ok(json!({ "rep": rep, "report": report, "confirmed": report.confirmed() }), text))
}

fn records_text(records: &[classify::CandidateRecord]) -> String {
    let mut text = String::new();
    for r in records {
        let why = r.primary_failure().map(|v| v.filter_name.as_str()).unwrap_or("");
        text.push_str(&format!("{:<36} {:<12} k={:<3} {:?} {why}\n", r.descriptor.to_string(), r.repr_type.to_string(), r.k.to_string(), r.status));
    }
    text
}

fn classify_cmd(what: ClassifyTarget, cli: &Cli, dir: &DataDir) -> Result<Output> {
    let (rank_cap, dim_cap) = (cli.rank_cap, cli.dim_cap);
    match what {
        ClassifyTarget::K4 => {
            let records = classify::enumerate_k4_real(rank_cap)?;
            Ok(Output::ok(json!({ "rank_cap": rank_cap, "records": records }), records_text(&records)))
        }
        ClassifyTarget::Simple => {
            let report = classify::simple_pipeline(rank_cap, &dir.symmetric_spaces()?.index(), dim_cap)?;
            let mut text = records_text(&report.records);
            let names: Vec<String> = report.survivors.iter().map(ToString::to_string).collect();
            text.push_str(&format!("survivors: {}\n", names.join(", ")));
            Ok(Output::ok(to_value(&report), text))
        }
        ClassifyTarget::Ctables => {
            let t = osc::classify_c_tables(rank_cap, verify::osc_scan_cap(dim_cap))?;
            let list = |v: &[RepDescriptor]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
            let text = format!("C1/2: {}\nC1: {}\nC3/2: {}\n", list(&t.c_half), list(&t.c1), list(&t.c1_half));
            Ok(Output::ok(to_value(&t), text))
        }
        ClassifyTarget::Composite => {
            let symmetric = dir.symmetric_spaces()?.index();
            let ctables = osc::classify_c_tables(rank_cap, verify::osc_scan_cap(dim_cap))?;
            let simple = classify::simple_pipeline(rank_cap, &symmetric, dim_cap)?;
            let ctx = CompositeContext::new(rank_cap, dim_cap, &symmetric, &ctables);
            let records = classify::composite_pipeline(&ctx, &simple)?;
            let survivors = classify::candidates(&records);
            let mut text = String::new();
            for s in &survivors {
                text.push_str(&format!("{s}\n"));
            }
            text.push_str(&format!("{} candidates out of {} records\n", survivors.len(), records.len()));
            Ok(Output::ok(json!({ "rank_cap": rank_cap, "candidates": survivors, "records": records }), text))
        }
        ClassifyTarget::Bms => {
            let scan = classify::sphere_scan(rank_cap, dim_cap)?;
            let list = |v: &std::collections::BTreeSet<RepDescriptor>| v.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n  ");
            let text = format!("real:\n  {}\ncomplex:\n  {}\n", list(&scan.real), list(&scan.complex));
            Ok(Output::ok(to_value(&scan), text))
        }
    }
}

fn check_output(check: TableCheck) -> Output {
    let mut text = format!(
        "table {}: {} ({} entries checked)\n",
        check.table,
        if check.passed() { "matches" } else { "MISMATCH" },
        check.checked
    );
    for m in &check.mismatches {
        text.push_str(&format!("  {m}\n"));
    }
    let exit = if check.passed() { EXIT_OK } else { EXIT_MISMATCH };
    let mut result = to_value(&check);
    result["passed"] = Value::Bool(check.passed());
    Output { result, text, exit }
}

fn tables(which: TableName, verify: bool, cli: &Cli, dir: &DataDir) -> Result<Output> {
    let (rank_cap, dim_cap) = (cli.rank_cap, cli.dim_cap);
    if !verify {
        return match which {
            TableName::A => {
                let mut rows = serde_json::Map::new();
                let mut text = String::new();
                for ty in LieType::all_up_to(rank_cap) {
                    let d = RootDatum::new(ty);
                    let b = build_sorth(&d)?;
                    let theta: Vec<String> = b.betas.iter().map(|r| fmt_theta(&d.root_to_theta(r))).collect();
                    text.push_str(&format!("{ty}: {}\n", theta.join(", ")));
                    rows.insert(ty.to_string(), to_value(&theta));
                }
                Ok(Output::ok(json!({ "sets": rows }), text))
            }
            TableName::B1 => {
                let mut rows = serde_json::Map::new();
                let mut text = String::new();
                for ty in LieType::all_up_to(rank_cap) {
                    let d = RootDatum::new(ty);
                    let ks: Vec<String> =
                        crate::dadok::fundamental_k_values(&d, &build_sorth(&d)?).iter().map(ToString::to_string).collect();
                    text.push_str(&format!("{ty}: {}\n", ks.join(" ")));
                    rows.insert(ty.to_string(), to_value(&ks));
                }
                Ok(Output::ok(json!({ "k": rows }), text))
            }
            TableName::C => classify_cmd(ClassifyTarget::Composite, cli, dir),
            TableName::K4 => classify_cmd(ClassifyTarget::K4, cli, dir),
            TableName::Simple => classify_cmd(ClassifyTarget::Simple, cli, dir),
            TableName::Ctables => classify_cmd(ClassifyTarget::Ctables, cli, dir),
            TableName::Bms => classify_cmd(ClassifyTarget::Bms, cli, dir),
            TableName::Hermitian => hermitian(None, None, dir),
        };
    }
    let check = match which {
        TableName::A => verify::check_sorth_table(dir)?,
        TableName::B1 => verify::check_k_table(dir)?,
        TableName::C => {
            let run = verify::full_run(dir, rank_cap, dim_cap)?;
            verify::check_composite(dir, &run.records)?
        }
        TableName::K4 => verify::check_k4(dir, rank_cap)?,
        TableName::Simple => {
            let report = classify::simple_pipeline(rank_cap, &dir.symmetric_spaces()?.index(), dim_cap)?;
            verify::check_simple(dir, &report)?
        }
        TableName::Ctables => verify::check_c_tables(dir, &osc::classify_c_tables(rank_cap, verify::osc_scan_cap(dim_cap))?)?,
        TableName::Bms => verify::check_spheres(dir, rank_cap, dim_cap)?,
        TableName::Hermitian => verify::check_hermitian(dir)?,
    };
    Ok(check_output(check))
}

fn hermitian(ambient: Option<LieType>, node: Option<usize>, dir: &DataDir) -> Result<Output> {
    if let (Some(ambient), Some(node)) = (ambient, node) {
        let data = classify::hermitian_pair(ambient, node)?;
        let v = classify::hermitian_redundancy(&data)?;
        let text = format!(
            "{ambient} node {node}: Γ = {{{}}}\n  circle redundant: {}\n  Γ-orthogonal: {}",
            data.noncompact_orthogonal_set.iter().map(|x| fmt_theta(x)).collect::<Vec<_>>().join(", "),
            v.circle_redundant,
            v.gamma_orthogonal
        );
        return Ok(Output::ok(json!({ "pair": data, "verdict": v }), text));
    }
    let mut rows = Vec::new();
    let mut text = String::new();
    for case in dir.hermitian_pairs()?.cases {
        for inst in &case.instances {
            let v = classify::hermitian_redundancy(&HermitianPairData::from_instance(inst)?)?;
            text.push_str(&format!(
                "{} ({}) {}: circle redundant {}, Γ-orthogonal {}\n",
                case.case, case.part, inst.rep, v.circle_redundant, v.gamma_orthogonal
            ));
            rows.push(json!({ "case": case.case, "part": case.part, "rep": inst.rep, "verdict": v }));
        }
    }
    Ok(Output::ok(json!({ "cases": rows }), text))
}
