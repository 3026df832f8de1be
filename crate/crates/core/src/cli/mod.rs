//! Command-line front end.
//!
//! [`run`] parses arguments, writes to the given streams and returns the
//! exit code, so the binary is a one-liner and the commands are testable
//! in-process. Exit codes: 0 for YES or success, 1 for NO, a failed
//! verification or a benchmark disagreement, 2 for usage and input errors,
//! 3 for capacity and budget errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::estimators::param_report;
use crate::generators::{random_source, Reduction, Source};
use crate::io;
use crate::model::{check_solution, Instance, SolveOutcome, Verdict};
use crate::sampling;
use crate::solvers::{solve, Algorithm, SolverConfig};

mod bench;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

/// `auto` never picks the brute-force solver above this many vertices.
pub const AUTO_BRUTE_LIMIT: usize = 25;

#[derive(Parser, Debug)]
#[command(name = "motif-kit", version, about = "Exact solvers and instance generators for Graph Motif")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide an instance; prints `YES` and a witness, or `NO`.
    Solve(SolveArgs),
    /// Check a witness against an instance.
    Verify {
        instance: PathBuf,
        witness: PathBuf,
    },
    /// Build an instance from a source problem via a reduction.
    Generate(GenerateArgs),
    /// Print structural parameters of an instance's graph.
    Params(ParamsArgs),
    /// Run several algorithms over a directory of instances.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    pub instance: PathBuf,
    /// auto, brute, dist-clique, vc, ecc, vcc, cocluster or maxleaf.
    #[arg(long, default_value = "auto")]
    pub algo: String,
    /// Partition of V into cliques, one clique per line.
    #[arg(long)]
    pub vertex_clique_cover: Option<PathBuf>,
    /// Cliques covering every edge, one clique per line.
    #[arg(long)]
    pub edge_clique_cover: Option<PathBuf>,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    pub timeout: Option<f64>,
    /// Limit on search nodes.
    #[arg(long)]
    pub node_limit: Option<u64>,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    /// Reduction name, e.g. x3c-paths or mcc-star.
    pub reduction: String,
    /// Source file; omit it and pass --seed for a random source.
    pub source: Option<PathBuf>,
    /// Seed for a random small source.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Root vertex, for domset-gadget.
    #[arg(long)]
    pub root: Option<usize>,
    /// Instance output path.
    #[arg(short, long)]
    pub output: PathBuf,
    /// Certificate output path (default: output with extension `cert`).
    #[arg(long)]
    pub certificate: Option<PathBuf>,
    /// Vertex clique cover output path, for reductions that produce one
    /// (default: output with extension `vcc`).
    #[arg(long)]
    pub cover: Option<PathBuf>,
    /// Also write the (possibly random) source here.
    #[arg(long)]
    pub write_source: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ParamsArgs {
    pub instance: PathBuf,
    #[arg(long)]
    pub vertex_clique_cover: Option<PathBuf>,
    #[arg(long)]
    pub edge_clique_cover: Option<PathBuf>,
    /// Give up on deletion sets larger than this.
    #[arg(long, default_value_t = 32)]
    pub max_k: usize,
    /// Wall-clock limit in seconds for each estimator.
    #[arg(long, default_value_t = 10.0)]
    pub timeout: f64,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Directory of `*.gm` instance files; `<stem>.vcc` and `<stem>.ecc`
    /// next to an instance supply covers.
    pub dir: PathBuf,
    /// Comma-separated algorithm names.
    #[arg(long, value_delimiter = ',', default_value = "brute,vc")]
    pub algo: Vec<String>,
    /// Per-cell limit in seconds.
    #[arg(long, default_value_t = 10.0)]
    pub timeout: f64,
}

/// Entry point used by the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_YES };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(&a, out, err),
        Command::Verify { instance, witness } => cmd_verify(&instance, &witness, out),
        Command::Generate(a) => cmd_generate(&a, out),
        Command::Params(a) => cmd_params(&a, out),
        Command::Bench(a) => bench::cmd_bench(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Input(_) | Error::Io(_) => EXIT_INPUT,
        Error::Capacity(_) | Error::Budget | Error::Internal(_) => EXIT_CAPACITY,
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_instance(path: &Path) -> Result<Instance> {
    io::parse_instance(&read(path)?)
}

fn read_cliques(path: Option<&PathBuf>) -> Result<Option<Vec<Vec<usize>>>> {
    path.map(|p| read(p).and_then(|t| io::parse_cliques(&t))).transpose()
}

fn cmd_solve(a: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let inst = read_instance(&a.instance)?;
    let vcc = read_cliques(a.vertex_clique_cover.as_ref())?;
    let ecc = read_cliques(a.edge_clique_cover.as_ref())?;
    let algorithm = if a.algo == "auto" {
        let (alg, why) = choose_auto(&inst, vcc.as_deref(), ecc.as_deref());
        let _ = writeln!(err, "auto: {alg} ({why})");
        alg
    } else {
        Algorithm::from_name(&a.algo).ok_or_else(|| Error::input(format!("unknown algorithm '{}'", a.algo)))?
    };
    let mut config = SolverConfig::new(algorithm);
    if let Some(c) = vcc {
        config = config.with_vertex_clique_cover(c);
    }
    if let Some(c) = ecc {
        config = config.with_edge_clique_cover(c);
    }
    if let Some(t) = a.timeout {
        config = config.with_timeout(seconds(t)?);
    }
    if let Some(n) = a.node_limit {
        config = config.with_node_limit(n);
    }
    Ok(print_outcome(&solve(&inst, &config)?, out))
}

fn print_outcome(outcome: &SolveOutcome, out: &mut dyn Write) -> i32 {
    match outcome {
        SolveOutcome::Yes(w) => {
            let _ = write!(out, "YES\n{}", io::write_witness(w));
            EXIT_YES
        }
        SolveOutcome::No => {
            let _ = writeln!(out, "NO");
            EXIT_NO
        }
    }
}

fn seconds(t: f64) -> Result<Duration> {
    Duration::try_from_secs_f64(t).map_err(|_| Error::input(format!("bad timeout {t}")))
}

/// Picks the algorithm whose parameter is smallest. Candidates are tried in
/// the order dist-clique, vc, cocluster, maxleaf, then supplied covers, so
/// ties go to the earlier one. Brute force is only a fallback, and only up
/// to [`AUTO_BRUTE_LIMIT`] vertices.
pub fn choose_auto(
    inst: &Instance,
    vcc: Option<&[Vec<usize>]>,
    ecc: Option<&[Vec<usize>]>,
) -> (Algorithm, String) {
    let g = &inst.graph;
    let budget = Budget::with_timeout(Duration::from_secs(2));
    let report = param_report(g, vcc, ecc, 40, &budget);
    let mut candidates: Vec<(Algorithm, &str, usize)> = Vec::new();
    if let Some(s) = &report.dist_to_clique {
        candidates.push((Algorithm::DistClique, "distance-to-clique", s.len()));
    }
    if let Some(s) = &report.vertex_cover {
        candidates.push((Algorithm::VertexCover, "vertex-cover", s.len()));
    }
    if let Some(s) = &report.dist_to_co_cluster {
        candidates.push((Algorithm::CoCluster, "distance-to-co-cluster", s.len()));
    }
    match &report.degree3 {
        Some(d) if d.s.len() < 64 => candidates.push((Algorithm::MaxLeaf, "degree3-set", d.s.len())),
        None => candidates.push((Algorithm::MaxLeaf, "cycle", 0)),
        _ => {}
    }
    if let (Some(true), Some(c)) = (report.vertex_clique_cover, vcc) {
        candidates.push((Algorithm::VertexCliqueCover, "vertex-clique-cover", c.len()));
    }
    if let (Some(true), Some(c)) = (report.edge_clique_cover, ecc) {
        candidates.push((Algorithm::EdgeCliqueCover, "edge-clique-cover", c.len()));
    }
    // min_by_key keeps the first of equal keys
    match candidates.iter().min_by_key(|c| c.2) {
        Some(&(alg, name, k)) => (alg, format!("{name} = {k}")),
        None if inst.n() <= AUTO_BRUTE_LIMIT => (Algorithm::Brute, format!("no parameter found, n = {}", inst.n())),
        None => (Algorithm::MaxLeaf, "no parameter found within limits".to_string()),
    }
}

fn cmd_verify(instance: &Path, witness: &Path, out: &mut dyn Write) -> Result<i32> {
    let inst = read_instance(instance)?;
    let w = io::parse_witness(&read(witness)?)?;
    let verdict = check_solution(&inst, &w)?;
    let _ = writeln!(out, "{}", verdict.label());
    Ok(if verdict == Verdict::Valid { EXIT_YES } else { EXIT_NO })
}

fn cmd_generate(a: &GenerateArgs, out: &mut dyn Write) -> Result<i32> {
    let red = Reduction::from_name(&a.reduction).ok_or_else(|| {
        let names: Vec<&str> = Reduction::ALL.iter().map(|r| r.name()).collect();
        Error::input(format!("unknown reduction '{}'; expected one of {}", a.reduction, names.join(", ")))
    })?;
    let source = match (&a.source, a.seed) {
        (Some(p), None) => Source::parse(red, &read(p)?, a.root)?,
        (None, Some(seed)) => random_source(red, &mut sampling::rng(seed)),
        _ => return Err(Error::input(format!("give either a source file or --seed; source format: {}", red.source_format()))),
    };
    let gen = source.generate()?;
    if let Some(p) = &a.write_source {
        write_file(p, &source.write())?;
    }
    write_file(&a.output, &io::write_instance(&gen.instance))?;
    let cert = a.certificate.clone().unwrap_or_else(|| a.output.with_extension("cert"));
    write_file(&cert, &io::write_certificate(&gen.certificate))?;
    let _ = writeln!(
        out,
        "{red}: {} vertices, {} edges, motif size {}, designated solver {}",
        gen.instance.n(),
        gen.instance.graph.m(),
        gen.instance.motif.total(),
        gen.designated_algorithm()
    );
    let _ = writeln!(out, "instance {}", a.output.display());
    let _ = writeln!(out, "certificate {}", cert.display());
    if let Some(c) = &gen.vertex_clique_cover {
        let path = a.cover.clone().unwrap_or_else(|| a.output.with_extension("vcc"));
        write_file(&path, &io::write_cliques(c))?;
        let _ = writeln!(out, "vertex-clique-cover {}", path.display());
    }
    Ok(EXIT_YES)
}

fn cmd_params(a: &ParamsArgs, out: &mut dyn Write) -> Result<i32> {
    let inst = read_instance(&a.instance)?;
    let vcc = read_cliques(a.vertex_clique_cover.as_ref())?;
    let ecc = read_cliques(a.edge_clique_cover.as_ref())?;
    let budget = Budget::with_timeout(seconds(a.timeout)?);
    let report = param_report(&inst.graph, vcc.as_deref(), ecc.as_deref(), a.max_k, &budget);
    let _ = out.write_all(report.render().as_bytes());
    Ok(EXIT_YES)
}
