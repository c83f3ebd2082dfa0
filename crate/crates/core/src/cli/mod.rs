//! Command-line front end.
//!
//! Every command builds a [`CommandResult`] holding both a JSON payload and
//! a plain-text rendering; [`run`] prints one of them and maps the status to
//! an exit code (0 success, 1 verification mismatch, 2 usage error).
//! Progress goes to standard error only.

pub mod reference;
pub mod reproduce;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::alpha::{
    alpha_closed_codim2, alpha_closed_codim3, alpha_table_with, mcmullen_reconstruct_with,
    verify_identities, verify_positivity, AlphaTable,
};
use crate::conepsi::{
    alpha_via_psi, pick_check, psi_dim2_general, psi_dim3_unimodular, unimodular_decomposition,
    ConeSpec, Polygon,
};
use crate::counter::{count_brute_force, count_lattice_points, rank_from_weights, DEFAULT_BRUTE_FORCE_CAP};
use crate::ehrhart::EhrhartCache;
use crate::error::{Error, Result};
use crate::permdata::{orbit_size, subset_to_composition, WeightVector};
use crate::Rational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fail,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub text: String,
}

impl CommandResult {
    fn new(ok: bool, payload: Value, text: String) -> Self {
        CommandResult { status: if ok { Status::Ok } else { Status::Fail }, payload, text }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => EXIT_OK,
            Status::Fail => EXIT_MISMATCH,
        }
    }

    /// Pretty JSON with sorted keys.
    pub fn render_json(&self) -> String {
        render_json(&self.payload)
    }
}

pub fn render_json(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values always serialize")
}

fn rational_json(q: &Rational) -> Value {
    Value::String(q.to_string())
}

fn rationals_json(qs: &[Rational]) -> Value {
    Value::Array(qs.iter().map(rational_json).collect())
}

fn join_rationals(qs: &[Rational], sep: &str) -> String {
    qs.iter().map(Rational::to_string).collect::<Vec<_>>().join(sep)
}

#[derive(Debug, Parser)]
#[command(name = "bv-ehrhart", version, about = "Exact Ehrhart and Berline-Vergne alpha computations")]
pub struct Cli {
    /// Worker threads for alpha-table fan-out (results do not depend on it).
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,

    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Alpha values of every face orbit of Π_n.
    AlphaTable {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=8))]
        n: u8,
    },
    /// Ehrhart polynomial of Σ w_k Δ_{k,n+1}.
    Ehrhart(EhrhartArgs),
    /// Lattice points of t · Σ w_k Δ_{k,n+1}.
    Count {
        #[arg(long, value_parser = parse_weights)]
        weights: WeightVector,
        #[arg(long, default_value_t = 1)]
        t: u64,
        /// Use the brute-force box scan instead of the profile walk.
        #[arg(long)]
        brute: bool,
    },
    /// Psi of a 2-dimensional cone in Z^2, e.g. --gens "0,-1;2,-1".
    Psi2 {
        #[arg(long, value_parser = parse_rows)]
        gens: Rows,
    },
    /// Psi of a unimodular 3-dimensional cone in Z^3.
    Psi3 {
        #[arg(long, value_parser = parse_rows)]
        gens: Rows,
    },
    /// Identity, positivity, cross-pipeline and McMullen checks for Π_n.
    Verify {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=8))]
        n: u8,
    },
    /// Recompute every published value and print a pass/fail manifest.
    Reproduce {
        /// Restrict to these tags (repeatable or comma separated).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
    /// Check McMullen's formula on Perm(w) for strictly positive weights.
    Mcmullen {
        #[arg(long, value_parser = parse_weights)]
        weights: WeightVector,
    },
    /// Pick's theorem and vertex Psi values of an integral convex polygon.
    Pick {
        #[arg(long, value_parser = parse_rows)]
        vertices: Rows,
    },
}

#[derive(Debug, Args)]
pub struct EhrhartArgs {
    #[arg(long, value_parser = parse_weights, conflicts_with = "hypersimplex")]
    pub weights: Option<WeightVector>,
    /// Use Δ_{k,n+1} (requires --n).
    #[arg(long, requires = "n")]
    pub hypersimplex: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Also list i(P, t) for t = 0..=d.
    #[arg(long)]
    pub dilations: Option<u64>,
}

/// Integer rows such as `"1,2;3,4"`.
pub type Rows = Vec<Vec<i64>>;

pub fn parse_weights(s: &str) -> std::result::Result<WeightVector, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(WeightVector::new(vec![]));
    }
    s.split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| format!("weight '{p}': {e} (weights are non-negative integers)")))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(WeightVector::new)
}

pub fn parse_rows(s: &str) -> std::result::Result<Rows, String> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|p| p.trim().parse::<i64>().map_err(|e| format!("entry '{p}': {e}")))
                .collect()
        })
        .collect()
}

fn fixed_rows<const N: usize>(rows: &Rows, what: &str) -> Result<Vec<[i64; N]>> {
    rows.iter()
        .map(|r| {
            <[i64; N]>::try_from(r.as_slice())
                .map_err(|_| Error::Parse(format!("{what}: expected {N} coordinates, got {r:?}")))
        })
        .collect()
}

pub fn cmd_alpha_table(n: usize, threads: usize) -> CommandResult {
    let cache = EhrhartCache::new();
    eprintln!("computing alpha table for n = {n}");
    let table = alpha_table_with(n, threads, &cache);
    let mut text = format!("{:<14} {:<18} {:<14} {:>10}  positive\n", "S", "composition", "alpha", "orbit");
    let mut entries = Vec::new();
    for (s, a) in table.iter() {
        let m = subset_to_composition(s);
        let orbit = orbit_size(s);
        let positive = *a > Rational::from_integer(0.into());
        let _ = writeln!(
            text,
            "{:<14} {:<18} {:<14} {:>10}  {}",
            format!("{s}"),
            m.to_string(),
            a.to_string(),
            orbit.to_string(),
            if positive { "yes" } else { "no" }
        );
        entries.push(json!({
            "subset": s.members(),
            "composition": m.parts(),
            "alpha": a.to_string(),
            "orbit_size": orbit.to_string(),
            "positive": positive,
        }));
    }
    CommandResult::new(true, json!({ "n": n, "entries": entries }), text)
}

pub fn cmd_ehrhart(args: &EhrhartArgs) -> Result<CommandResult> {
    let weights = match (&args.weights, args.hypersimplex) {
        (Some(w), None) => {
            if let Some(n) = args.n {
                if n != w.n() {
                    return Err(Error::Parse(format!("--n {n} but {} weights given", w.n())));
                }
            }
            w.clone()
        }
        (None, Some(k)) => {
            let n = args.n.ok_or_else(|| Error::Parse("--hypersimplex needs --n".into()))?;
            WeightVector::hypersimplex(n, k)?
        }
        _ => return Err(Error::Parse("give exactly one of --weights or --hypersimplex".into())),
    };
    let cache = EhrhartCache::new();
    let p = cache.ehrhart(&weights);
    let mut text = join_rationals(p.coeffs(), " ");
    text.push('\n');
    let mut payload = json!({
        "weights": weights.weights(),
        "degree": p.degree(),
        "coefficients": rationals_json(p.coeffs()),
    });
    if let Some(d) = args.dilations {
        let values: Vec<Rational> =
            (0..=d).map(|t| p.evaluate(&Rational::from_integer(t.into()))).collect();
        for (t, v) in values.iter().enumerate() {
            let _ = writeln!(text, "t={t}: {v}");
        }
        payload["values"] = rationals_json(&values);
    }
    Ok(CommandResult::new(true, payload, text))
}

pub fn cmd_count(weights: &WeightVector, t: u64, brute: bool) -> Result<CommandResult> {
    let r = rank_from_weights(weights, t);
    let count = if brute { count_brute_force(&r, DEFAULT_BRUTE_FORCE_CAP)? } else { count_lattice_points(&r) };
    let payload = json!({
        "weights": weights.weights(),
        "t": t,
        "method": if brute { "brute-force" } else { "profiles" },
        "count": count.to_string(),
    });
    Ok(CommandResult::new(true, payload, format!("{count}\n")))
}

pub fn cmd_psi2(gens: &Rows) -> Result<CommandResult> {
    let [a, b]: [[i64; 2]; 2] = fixed_rows::<2>(gens, "psi2")?
        .try_into()
        .map_err(|_| Error::Parse("psi2 needs exactly two generators".into()))?;
    let cone = ConeSpec::standard(&[&a, &b]);
    let value = psi_dim2_general(&cone)?;
    let dec = unimodular_decomposition(&cone).ok();
    let mut text = format!("{value}\n");
    let mut payload = json!({ "generators": [a, b], "psi": value.to_string() });
    if let Some(dec) = dec {
        let pieces: Vec<Value> = dec
            .cones
            .iter()
            .map(|(u, v)| json!([u.to_string(), v.to_string()]))
            .collect();
        let rays: Vec<String> = dec.rays.iter().map(|r| r.to_string()).collect();
        if !rays.is_empty() {
            for (u, v) in &dec.cones {
                let _ = writeln!(text, "+ Cone({u}, {v})");
            }
            for r in &rays {
                let _ = writeln!(text, "- Cone({r})");
            }
        }
        payload["pieces"] = Value::Array(pieces);
        payload["shared_rays"] = json!(rays);
    }
    Ok(CommandResult::new(true, payload, text))
}

pub fn cmd_psi3(gens: &Rows) -> Result<CommandResult> {
    let rows = fixed_rows::<3>(gens, "psi3")?;
    if rows.len() != 3 {
        return Err(Error::Parse("psi3 needs exactly three generators".into()));
    }
    let cone = ConeSpec::standard(&[&rows[0], &rows[1], &rows[2]]);
    let value = psi_dim3_unimodular(&cone)?;
    Ok(CommandResult::new(true, json!({ "generators": rows, "psi": value.to_string() }), format!("{value}\n")))
}

struct NamedCheck {
    name: String,
    passed: bool,
    detail: String,
}

/// Cross-pipeline agreement for codimension <= 3 faces of Π_n.
fn cross_pipeline_checks(table: &AlphaTable) -> Vec<NamedCheck> {
    let n = table.n();
    let mut psi_bad = Vec::new();
    let mut closed_bad = Vec::new();
    let mut psi_count = 0;
    let mut closed_count = 0;
    for (s, a) in table.iter().filter(|(s, _)| s.codim() <= 3) {
        psi_count += 1;
        match alpha_via_psi(s) {
            Ok(v) if v == *a => {}
            Ok(v) => psi_bad.push(format!("{{{s}}}: psi {v} vs table {a}")),
            Err(e) => psi_bad.push(format!("{{{s}}}: {e}")),
        }
        let closed = match s.complement().members() {
            [i, j] => Some(alpha_closed_codim2(n, *i, *j)),
            [i, j, k] => Some(alpha_closed_codim3(n, *i, *j, *k)),
            _ => None,
        };
        if let Some(c) = closed {
            closed_count += 1;
            match c {
                Ok(v) if v == *a => {}
                Ok(v) => closed_bad.push(format!("{{{s}}}: closed {v} vs table {a}")),
                Err(e) => closed_bad.push(format!("{{{s}}}: {e}")),
            }
        }
    }
    let summarize = |bad: Vec<String>, count: usize| {
        if bad.is_empty() {
            format!("{count} faces agree")
        } else {
            bad.join("; ")
        }
    };
    vec![
        NamedCheck {
            name: "psi-vs-mixed".into(),
            passed: psi_bad.is_empty(),
            detail: summarize(psi_bad, psi_count),
        },
        NamedCheck {
            name: "closed-form-vs-mixed".into(),
            passed: closed_bad.is_empty(),
            detail: summarize(closed_bad, closed_count),
        },
    ]
}

pub fn cmd_verify(n: usize, threads: usize) -> Result<CommandResult> {
    let cache = EhrhartCache::new();
    eprintln!("computing alpha table for n = {n}");
    let table = alpha_table_with(n, threads, &cache);

    let mut checks: Vec<NamedCheck> = verify_identities(&table)
        .checks
        .into_iter()
        .map(|c| NamedCheck { name: c.name, passed: c.passed, detail: c.detail })
        .collect();

    let pos = verify_positivity(&table);
    checks.push(NamedCheck {
        name: "positivity".into(),
        passed: pos.all_positive(),
        detail: if pos.all_positive() {
            format!("all {} entries positive", pos.checked)
        } else {
            pos.nonpositive.iter().map(|(s, a)| format!("{{{s}}}: {a}")).collect::<Vec<_>>().join("; ")
        },
    });

    eprintln!("cross-checking codimension <= 3 faces");
    checks.extend(cross_pipeline_checks(&table));

    eprintln!("reconstructing Lat(Π_{n}) from McMullen's formula");
    let mc = mcmullen_reconstruct_with(&WeightVector::regular(n), &table, &cache)?;
    checks.push(NamedCheck {
        name: "mcmullen-regular".into(),
        passed: mc.equal,
        detail: format!("direct {} vs formula {}", mc.lhs, mc.rhs),
    });

    let ok = checks.iter().all(|c| c.passed);
    let mut text = String::new();
    for c in &checks {
        let _ = writeln!(text, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    let _ = writeln!(text, "{}", if ok { "all checks passed" } else { "verification FAILED" });
    let payload = json!({
        "n": n,
        "passed": ok,
        "checks": checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail })).collect::<Vec<_>>(),
    });
    Ok(CommandResult::new(ok, payload, text))
}

pub fn cmd_reproduce(only: &[String], threads: usize) -> Result<CommandResult> {
    let known = reproduce::tags();
    if let Some(bad) = only.iter().find(|t| !known.contains(t)) {
        return Err(Error::Parse(format!("unknown tag '{bad}'; known tags: {}", known.join(", "))));
    }
    let outcomes = reproduce::run_checks(&reproduce::battery(), only, threads);
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let mut text = String::new();
    for o in &outcomes {
        if o.passed {
            let _ = writeln!(text, "PASS [{}] {} = {}", o.tag, o.name, join_rationals(&o.computed, ", "));
        } else {
            let _ = writeln!(
                text,
                "FAIL [{}] {}: expected {}, computed {}",
                o.tag,
                o.name,
                join_rationals(&o.expected, ", "),
                join_rationals(&o.computed, ", ")
            );
        }
    }
    if failed == 0 {
        let _ = writeln!(text, "all {} checks passed", outcomes.len());
    } else {
        let _ = writeln!(text, "{failed} of {} checks failed", outcomes.len());
    }
    let payload = json!({
        "total": outcomes.len(),
        "failed": failed,
        "checks": outcomes.iter().map(|o| json!({
            "tag": o.tag,
            "name": o.name,
            "expected": rationals_json(&o.expected),
            "computed": rationals_json(&o.computed),
            "passed": o.passed,
        })).collect::<Vec<_>>(),
    });
    Ok(CommandResult::new(failed == 0, payload, text))
}

pub fn cmd_mcmullen(weights: &WeightVector, threads: usize) -> Result<CommandResult> {
    if weights.weights().contains(&0) || weights.n() == 0 {
        return Err(Error::NonGenericWeights(weights.weights().to_vec()));
    }
    let cache = EhrhartCache::new();
    let table = alpha_table_with(weights.n(), threads, &cache);
    let mc = mcmullen_reconstruct_with(weights, &table, &cache)?;
    let text = format!(
        "direct count: {}\nformula:      {}\n{}\n",
        mc.lhs,
        mc.rhs,
        if mc.equal { "equal" } else { "MISMATCH" }
    );
    let payload = json!({
        "weights": weights.weights(),
        "lhs": mc.lhs.to_string(),
        "rhs": mc.rhs.to_string(),
        "equal": mc.equal,
    });
    Ok(CommandResult::new(mc.equal, payload, text))
}

pub fn cmd_pick(vertices: &Rows) -> Result<CommandResult> {
    let vs = fixed_rows::<2>(vertices, "pick")?;
    let report = pick_check(&Polygon::new(vs.clone())?)?;
    let mut text = format!(
        "lattice points: {}\narea: {}\nboundary points: {}\n",
        report.lat, report.area, report.boundary
    );
    for (v, psi) in vs.iter().zip(&report.vertex_psi) {
        let _ = writeln!(text, "Psi at ({}, {}): {psi}", v[0], v[1]);
    }
    let _ = writeln!(text, "McMullen sum: {}", report.mcmullen_sum);
    let _ = writeln!(text, "{}", if report.all_equal { "consistent" } else { "MISMATCH" });
    let payload = json!({
        "vertices": vs,
        "lat": report.lat.to_string(),
        "area": report.area.to_string(),
        "boundary": report.boundary.to_string(),
        "vertex_psi": rationals_json(&report.vertex_psi),
        "mcmullen_sum": report.mcmullen_sum.to_string(),
        "all_equal": report.all_equal,
    });
    Ok(CommandResult::new(report.all_equal, payload, text))
}

/// Dispatches a parsed command.
pub fn execute(cli: &Cli) -> Result<CommandResult> {
    let threads = cli.threads.max(1);
    match &cli.command {
        Command::AlphaTable { n } => Ok(cmd_alpha_table(*n as usize, threads)),
        Command::Ehrhart(args) => cmd_ehrhart(args),
        Command::Count { weights, t, brute } => cmd_count(weights, *t, *brute),
        Command::Psi2 { gens } => cmd_psi2(gens),
        Command::Psi3 { gens } => cmd_psi3(gens),
        Command::Verify { n } => cmd_verify(*n as usize, threads),
        Command::Reproduce { only } => cmd_reproduce(only, threads),
        Command::Mcmullen { weights } => cmd_mcmullen(weights, threads),
        Command::Pick { vertices } => cmd_pick(vertices),
    }
}

/// Parses `args`, runs the command, prints the result and returns the exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(result) => {
            if cli.json {
                println!("{}", result.render_json());
            } else {
                print!("{}", result.text);
            }
            result.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
