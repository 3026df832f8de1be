//! `bench`: every algorithm on every instance of a directory, in parallel.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;

use super::{choose_auto, read_cliques, read_instance, seconds, BenchArgs, EXIT_NO, EXIT_YES};
use crate::error::{Error, Result};
use crate::model::{verify_solution, SolveOutcome};
use crate::solvers::{solve, Algorithm, SolverConfig};

/// Caps the worker threads used by `bench`.
pub const THREADS_ENV: &str = "MOTIF_KIT_THREADS";

struct Cell {
    answer: &'static str,
    millis: f64,
}

pub(super) fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> Result<i32> {
    let algos: Vec<Option<Algorithm>> = a
        .algo
        .iter()
        .map(|name| match name.as_str() {
            "auto" => Ok(None),
            _ => Algorithm::from_name(name)
                .map(Some)
                .ok_or_else(|| Error::input(format!("unknown algorithm '{name}'"))),
        })
        .collect::<Result<_>>()?;
    let timeout = seconds(a.timeout)?;
    let files = instance_files(&a.dir)?;
    let jobs: Vec<(usize, usize)> = (0..files.len()).flat_map(|f| (0..algos.len()).map(move |k| (f, k))).collect();

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()).filter(|&n| n > 0) {
        pool = pool.num_threads(n);
    }
    let pool = pool.build().map_err(|e| Error::Internal(e.to_string()))?;
    let cells: Vec<Cell> = pool.install(|| {
        jobs.par_iter()
            .map(|&(f, k)| run_cell(&files[f], algos[k], timeout))
            .collect()
    });

    let _ = writeln!(out, "instance\talgo\tanswer\ttime_ms\tagreement");
    let mut disagreements = 0;
    for (f, path) in files.iter().enumerate() {
        let row = &cells[f * algos.len()..(f + 1) * algos.len()];
        let decided: Vec<&str> = row.iter().map(|c| c.answer).filter(|&x| x == "YES" || x == "NO").collect();
        let agree = decided.windows(2).all(|w| w[0] == w[1]);
        if !agree {
            disagreements += 1;
        }
        let name = path.file_name().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
        for (k, cell) in row.iter().enumerate() {
            let algo = algos[k].map_or("auto", |x| x.name());
            let mark = match cell.answer {
                "YES" | "NO" if agree => "agree",
                "YES" | "NO" => "DISAGREE",
                _ => "-",
            };
            let _ = writeln!(out, "{name}\t{algo}\t{}\t{:.1}\t{mark}", cell.answer, cell.millis);
        }
    }
    Ok(if disagreements == 0 { EXIT_YES } else { EXIT_NO })
}

fn instance_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let entries = std::fs::read_dir(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "gm"))
        .collect();
    files.sort();
    Ok(files)
}

fn run_cell(path: &Path, algo: Option<Algorithm>, timeout: std::time::Duration) -> Cell {
    let start = Instant::now();
    let answer = match solve_file(path, algo, timeout) {
        Ok(SolveOutcome::Yes(_)) => "YES",
        Ok(SolveOutcome::No) => "NO",
        Err(Error::Budget) => "TO",
        Err(_) => "ERR",
    };
    Cell { answer, millis: start.elapsed().as_secs_f64() * 1000.0 }
}

fn solve_file(path: &Path, algo: Option<Algorithm>, timeout: std::time::Duration) -> Result<SolveOutcome> {
    let inst = read_instance(path)?;
    let sidecar = |ext: &str| {
        let p = path.with_extension(ext);
        p.is_file().then_some(p)
    };
    let vcc = read_cliques(sidecar("vcc").as_ref())?;
    let ecc = read_cliques(sidecar("ecc").as_ref())?;
    let algo = algo.unwrap_or_else(|| choose_auto(&inst, vcc.as_deref(), ecc.as_deref()).0);
    let mut config = SolverConfig::new(algo).with_timeout(timeout);
    config.vertex_clique_cover = vcc;
    config.edge_clique_cover = ecc;
    let outcome = solve(&inst, &config)?;
    if let SolveOutcome::Yes(w) = &outcome {
        if !verify_solution(&inst, w)? {
            return Err(Error::Internal(format!("invalid witness for {}", path.display())));
        }
    }
    Ok(outcome)
}
