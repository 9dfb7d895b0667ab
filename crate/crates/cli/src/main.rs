//! `p7c4c5`: batch front end. Reports go to stdout as JSON, a short
//! summary goes to stderr. Vertex ids inside JSON are 0-based (file id
//! minus one).
//!
//! Exit status: 0 on success, 1 on a class violation or a failed
//! self-check, 2 on bad usage or unreadable input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use p7c4c5::certificate::{verify_certificate, AtomCertificate};
use p7c4c5::forge::{self, Family, InstanceSpec};
use p7c4c5::patterns::class_membership;
use p7c4c5::rational::{format_rational, unit_weights};
use p7c4c5::recognize::{recognize_atom_with, RecognizeOptions};
use p7c4c5::solve::{max_weight_clique_with, min_coloring_with, mwis_with, Diagnostics, SolveOptions};
use p7c4c5::{io, Coloring, Error, Graph, Rational, VertexSet, WeightedSet};
use serde_json::{json, Value};

const SCHEMA: u64 = 1;

#[derive(Parser)]
#[command(name = "p7c4c5", version, about = "Decomposition, recognition and exact solvers for (P7,C4,C5)-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Clone)]
struct Global {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for independent atoms (0: all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Weights file, one rational per line in vertex order (default: all 1).
    #[arg(long, global = true)]
    weights: Option<PathBuf>,
    /// Largest subgraph given to a brute-force fallback.
    #[arg(long, global = true, default_value_t = 22)]
    max_oracle: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Report induced P7, C4, C5, C7 and theta witnesses.
    Check { graph: PathBuf },
    /// Clique-cutset decomposition tree.
    Decompose { graph: PathBuf },
    /// Recognize an atom and print its certificate.
    Recognize { graph: PathBuf },
    /// Minimum coloring.
    Color { graph: PathBuf },
    /// Maximum weight stable set.
    Mwis { graph: PathBuf },
    /// Maximum weight clique.
    Clique { graph: PathBuf },
    /// Generate an atom from a JSON spec, or a random one of a family.
    Gen(GenArgs),
    /// Re-check a certificate or a solver report against a graph.
    Verify { graph: PathBuf, report: PathBuf },
}

#[derive(Args)]
struct GenArgs {
    /// JSON instance spec.
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    spec: Option<PathBuf>,
    /// Random instance of this family (wreath, crown, lantern, bracelet, emerald).
    #[arg(long)]
    family: Option<String>,
    /// Size bound for random instances.
    #[arg(long, default_value_t = 14)]
    max_n: usize,
    /// Size of an added universal clique.
    #[arg(long, default_value_t = 0)]
    universal: usize,
    /// Scramble vertex ids with the seed.
    #[arg(long)]
    shuffle: bool,
    /// Output graph file; the certificate goes next to it as `<out>.cert.json`.
    #[arg(long, short)]
    out: PathBuf,
}

/// A failure together with its exit status.
struct Failure {
    code: u8,
    err: anyhow::Error,
    report: Option<Value>,
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        let code = match err.downcast_ref::<Error>() {
            Some(Error::ClassViolation { .. } | Error::Certificate(_) | Error::NotChordal(_)) => 1,
            Some(Error::Internal(_)) => 1,
            _ => 2,
        };
        Failure { code, err, report: None }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        anyhow::Error::from(err).into()
    }
}

type Outcome = std::result::Result<(Value, String), Failure>;

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::read_dimacs(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_json(path: &Path) -> anyhow::Result<Value> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn weights(g: &Graph, global: &Global) -> anyhow::Result<Vec<Rational>> {
    match &global.weights {
        None => Ok(unit_weights(g.n())),
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            Ok(io::read_weights(&text, g.n()).with_context(|| format!("parsing {}", p.display()))?)
        }
    }
}

fn opts(global: &Global) -> SolveOptions {
    SolveOptions { jobs: global.jobs, max_oracle: global.max_oracle, ..SolveOptions::default() }
}

fn report(command: &str, g: &Graph, body: Value) -> Value {
    let mut v = json!({ "schema": SCHEMA, "command": command, "n": g.n(), "m": g.m() });
    if let (Value::Object(dst), Value::Object(src)) = (&mut v, body) {
        dst.extend(src);
    }
    v
}

fn check(g: &Graph) -> Outcome {
    let r = class_membership(g);
    let free = |w: &Option<_>| w.is_none();
    let summary = format!(
        "P7-free {} C4-free {} C5-free {} C7-free {} theta-free {}",
        mark(free(&r.p7)),
        mark(free(&r.c4)),
        mark(free(&r.c5)),
        mark(free(&r.c7)),
        mark(free(&r.theta33))
    );
    let witnesses_ok = [&r.p7, &r.c4, &r.c5, &r.c7, &r.theta33].iter().all(|w| w.as_ref().map_or(true, |w| w.verify(g)));
    let body = json!({
        "in_class": r.in_class(),
        "free": {
            "p7": r.p7_free(), "c4": r.c4_free(), "c5": r.c5_free(),
            "c7": r.c7_free(), "theta33": r.theta33_free(),
        },
        "witnesses": r,
        "verification": { "witnesses_induced": witnesses_ok },
    });
    finish(report("check", g, body), summary, witnesses_ok)
}

fn mark(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn decompose(g: &Graph) -> Outcome {
    let tree = p7c4c5::cutset::decompose(g);
    let valid = tree.validate(g);
    let leaves = tree.leaves();
    let sizes: Vec<usize> = leaves.iter().map(|l| l.len()).collect();
    let summary = format!("{} atoms, sizes {:?}\n{}", leaves.len(), sizes, tree.dump().trim_end());
    let body = json!({
        "atoms": leaves,
        "tree": tree,
        "verification": { "valid": valid.is_ok(), "error": valid.as_ref().err().map(|e| e.to_string()) },
    });
    finish(report("decompose", g, body), summary, valid.is_ok())
}

fn recognize(g: &Graph) -> Outcome {
    let cert = recognize_atom_with(g, &RecognizeOptions::default())?;
    let errors = verify_certificate(g, &cert);
    let summary = format!("{} atom, |U| = {}", cert.kind.name(), cert.universal.len());
    let body = json!({
        "class": cert.kind.name(),
        "certificate": cert,
        "verification": { "certificate_ok": errors.is_empty(), "errors": errors },
    });
    let ok = errors.is_empty();
    finish(report("recognize", g, body), summary, ok)
}

fn diag(d: &Diagnostics) -> Value {
    serde_json::to_value(d).expect("diagnostics serialize")
}

fn color(g: &Graph, global: &Global) -> Outcome {
    let solved = min_coloring_with(g, &opts(global))?;
    let c = &solved.value;
    let proper = c.is_proper(g) && c.colors.iter().all(|&x| (1..=c.count).contains(&x));
    let summary = format!("{} colors over {} atoms", c.count, solved.diagnostics.atoms);
    let body = json!({
        "colors": c.count,
        "coloring": c.colors,
        "diagnostics": diag(&solved.diagnostics),
        "verification": { "proper": proper },
    });
    finish(report("color", g, body), summary, proper)
}

fn weighted(command: &str, g: &Graph, w: &[Rational], s: &WeightedSet, d: &Diagnostics, stable: bool) -> Outcome {
    let ok = if stable { s.is_valid_stable(g, w) } else { s.is_valid_clique(g, w) };
    let set = s.vertices.to_vec();
    let value = format_rational(&s.weight);
    let summary = format!("weight {} on {} vertices", value, set.len());
    let role = if stable { "stable" } else { "clique" };
    let body = json!({
        "value": value,
        "vertices": set,
        "diagnostics": diag(d),
        "verification": { role: ok, "weight_matches": weight_of(&s.vertices, w) == s.weight },
    });
    finish(report(command, g, body), summary, ok)
}

fn weight_of(s: &VertexSet, w: &[Rational]) -> Rational {
    s.iter().map(|v| w[v]).sum()
}

fn gen(args: &GenArgs, global: &Global) -> Outcome {
    let spec: InstanceSpec = match (&args.spec, &args.family) {
        (Some(p), _) => serde_json::from_value(read_json(p)?).with_context(|| format!("spec {}", p.display()))?,
        (None, Some(f)) => {
            let family: Family = serde_json::from_value(Value::String(f.clone()))
                .map_err(|_| anyhow!("unknown family `{f}`"))?;
            forge::random_spec(family, args.max_n, &mut forge::rng(global.seed))
        }
        (None, None) => return Err(anyhow!("either --spec or --family is required").into()),
    };
    let (g, cert) = forge::generate(&spec, global.seed, args.universal, args.shuffle)?;
    let errors = verify_certificate(&g, &cert);
    let name = format!("{} seed {}", cert.kind.name(), global.seed);
    let cert_path = PathBuf::from(format!("{}.cert.json", args.out.display()));
    fs::write(&args.out, io::write_dimacs(&g, &[&name])).with_context(|| format!("writing {}", args.out.display()))?;
    let sidecar = json!({ "schema": SCHEMA, "spec": spec, "certificate": cert });
    fs::write(&cert_path, pretty(&sidecar)).with_context(|| format!("writing {}", cert_path.display()))?;
    let summary = format!("{name}: n = {} m = {} -> {}", g.n(), g.m(), args.out.display());
    let body = json!({
        "class": cert.kind.name(),
        "graph_file": args.out.display().to_string(),
        "certificate_file": cert_path.display().to_string(),
        "spec": spec,
        "verification": { "certificate_ok": errors.is_empty(), "errors": errors },
    });
    let ok = errors.is_empty();
    finish(report("gen", &g, body), summary, ok)
}

/// Accepts a certificate (bare or in a `gen` sidecar or `recognize`
/// report) or a `color` / `mwis` / `clique` report.
fn verify(g: &Graph, doc: &Value, global: &Global) -> Outcome {
    let cmd = doc.get("command").and_then(Value::as_str);
    let mut checks = serde_json::Map::new();
    let what;
    match cmd {
        Some("color") => {
            what = "coloring";
            let colors: Vec<usize> = serde_json::from_value(doc["coloring"].clone()).context("coloring field")?;
            let claimed = doc["colors"].as_u64().context("colors field")? as usize;
            let ok_len = colors.len() == g.n();
            let c = Coloring::new(colors);
            checks.insert("length".into(), json!(ok_len));
            checks.insert("proper".into(), json!(ok_len && c.is_proper(g)));
            checks.insert("count".into(), json!(c.count == claimed));
        }
        Some(c @ ("mwis" | "clique")) => {
            what = if c == "mwis" { "stable set" } else { "clique" };
            let w = weights(g, global)?;
            let vs: Vec<usize> = serde_json::from_value(doc["vertices"].clone()).context("vertices field")?;
            if let Some(&v) = vs.iter().find(|&&v| v >= g.n()) {
                return Err(Error::OutOfRange { vertex: v, n: g.n() }.into());
            }
            let set = VertexSet::from_iter(g.n(), vs);
            let claimed = doc["value"].as_str().context("value field")?;
            let claimed = p7c4c5::rational::parse_rational(claimed)?;
            let shape = if c == "mwis" { g.is_stable(&set) } else { g.is_clique(&set) };
            checks.insert(if c == "mwis" { "stable" } else { "clique" }.into(), json!(shape));
            checks.insert("weight_matches".into(), json!(weight_of(&set, &w) == claimed));
        }
        _ => {
            what = "certificate";
            let raw = doc.get("certificate").unwrap_or(doc);
            let cert: AtomCertificate = serde_json::from_value(raw.clone()).context("certificate")?;
            let errors = verify_certificate(g, &cert);
            checks.insert("certificate_ok".into(), json!(errors.is_empty()));
            checks.insert("errors".into(), json!(errors));
        }
    }
    let ok = checks.iter().filter(|(k, _)| k.as_str() != "errors").all(|(_, v)| v.as_bool() == Some(true));
    let summary = format!("{what}: {}", if ok { "verified" } else { "REJECTED" });
    let body = json!({ "kind": what, "verification": Value::Object(checks), "verified": ok });
    finish(report("verify", g, body), summary, ok)
}

fn finish(report: Value, summary: String, ok: bool) -> Outcome {
    if ok {
        Ok((report, summary))
    } else {
        Err(Failure { code: 1, err: anyhow!("self-verification failed: {summary}"), report: Some(report) })
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    match &cli.command {
        Command::Check { graph } => check(&read_graph(graph)?),
        Command::Decompose { graph } => decompose(&read_graph(graph)?),
        Command::Recognize { graph } => recognize(&read_graph(graph)?),
        Command::Color { graph } => color(&read_graph(graph)?, g),
        Command::Mwis { graph } => {
            let gr = read_graph(graph)?;
            let w = weights(&gr, g)?;
            let s = mwis_with(&gr, &w, &opts(g))?;
            weighted("mwis", &gr, &w, &s.value, &s.diagnostics, true)
        }
        Command::Clique { graph } => {
            let gr = read_graph(graph)?;
            let w = weights(&gr, g)?;
            let s = max_weight_clique_with(&gr, &w, &opts(g))?;
            weighted("clique", &gr, &w, &s.value, &s.diagnostics, false)
        }
        Command::Gen(args) => gen(args, g),
        Command::Verify { graph, report } => verify(&read_graph(graph)?, &read_json(report)?, g),
    }
}

fn error_report(f: &Failure) -> Value {
    let mut v = json!({ "schema": SCHEMA, "error": format!("{:#}", f.err), "exit": f.code });
    if let Some(Error::ClassViolation { witness: Some(w), .. }) = f.err.downcast_ref::<Error>() {
        v["witness"] = serde_json::to_value(w).expect("witness serializes");
    }
    v
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, summary)) => {
            print!("{}", pretty(&report));
            eprintln!("{summary}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            print!("{}", pretty(f.report.as_ref().unwrap_or(&error_report(&f))));
            eprintln!("error: {:#}", f.err);
            ExitCode::from(f.code)
        }
    }
}
