use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use spa_core::{Heuristic, NetlistFormat, TieBreak};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderingArg {
    MinDegree,
    MinWidth,
    MaxCardinality,
    Causal,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TieBreakArg {
    Index,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn ext(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

/// Options shared by every pipeline command.
#[derive(Debug, Args)]
pub struct RunArgs {
    /// Netlist files (.isc or .bench) or directories of them
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,

    /// Elimination ordering heuristic
    #[arg(long, value_enum, env = "SPA_ORDERING", default_value = "all")]
    pub ordering: OrderingArg,

    /// Tie-break policy for the ordering heuristics
    #[arg(long, value_enum, env = "SPA_TIE_BREAK", default_value = "index")]
    pub tie_break: TieBreakArg,

    /// Seed for `--tie-break random`
    #[arg(long, env = "SPA_SEED")]
    pub seed: Option<u64>,

    /// Separator bound for the hybrid point or secondary tree
    #[arg(long, env = "SPA_SEP_BOUND")]
    pub sep_bound: Option<usize>,

    /// Output format
    #[arg(long, value_enum, env = "SPA_FORMAT", default_value = "csv")]
    pub format: Format,

    /// Output directory; stdout when absent
    #[arg(long, env = "SPA_OUT")]
    pub out: Option<PathBuf>,

    /// Per-circuit time limit in seconds
    #[arg(long, env = "SPA_TIMEOUT")]
    pub timeout: Option<f64>,

    /// Largest graph handed to the exact oracles
    #[arg(long, env = "SPA_ORACLE_LIMIT", default_value_t = 10)]
    pub oracle_limit: usize,

    /// Worker threads; defaults to the number of CPUs
    #[arg(long, env = "SPA_JOBS")]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub inputs: Vec<PathBuf>,
    pub orderings: Vec<Heuristic>,
    pub tie: TieBreak,
    pub sep_bound: Option<usize>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub timeout: Option<Duration>,
    pub oracle_limit: usize,
    pub jobs: Option<usize>,
}

impl RunConfig {
    pub fn from_args(args: RunArgs) -> Result<Self> {
        let tie = match (args.tie_break, args.seed) {
            (TieBreakArg::Index, None) => TieBreak::Index,
            (TieBreakArg::Index, Some(_)) => bail!("--seed requires --tie-break random"),
            (TieBreakArg::Random, Some(seed)) => TieBreak::Random { seed },
            (TieBreakArg::Random, None) => bail!("--tie-break random requires --seed"),
        };
        let orderings = match args.ordering {
            OrderingArg::All => Heuristic::ALL.to_vec(),
            OrderingArg::MinDegree => vec![Heuristic::MinDegree],
            OrderingArg::MinWidth => vec![Heuristic::MinWidth],
            OrderingArg::MaxCardinality => vec![Heuristic::MaxCardinality],
            OrderingArg::Causal => vec![Heuristic::Causal],
        };
        let timeout = match args.timeout {
            Some(t) if !(t.is_finite() && t > 0.0) => bail!("--timeout must be positive"),
            t => t.map(Duration::from_secs_f64),
        };
        if args.jobs == Some(0) {
            bail!("--jobs must be at least 1");
        }
        Ok(RunConfig {
            inputs: discover(&args.inputs)?,
            orderings,
            tie,
            sep_bound: args.sep_bound,
            format: args.format,
            out: args.out,
            timeout,
            oracle_limit: args.oracle_limit,
            jobs: args.jobs,
        })
    }

    /// Ordering used for the primary tree when several are selected.
    pub fn primary(&self) -> Heuristic {
        if self.orderings.contains(&Heuristic::MinDegree) {
            Heuristic::MinDegree
        } else {
            self.orderings[0]
        }
    }
}

/// Expand directories into their netlists, sorted by name. A directory
/// holding both `x.isc` and `x.bench` contributes only `x.isc`.
pub fn discover(inputs: &[PathBuf]) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for path in inputs {
        if path.is_dir() {
            out.extend(scan_dir(path)?);
        } else if path.is_file() {
            out.push(path.clone());
        } else {
            bail!("{}: no such file or directory", path.display());
        }
    }
    if out.is_empty() {
        bail!("no netlists found");
    }
    Ok(out)
}

fn scan_dir(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && NetlistFormat::from_path(p).is_some())
        .collect();
    files.sort();
    let has_isc = |p: &Path| p.with_extension("isc").is_file();
    files.retain(|p| NetlistFormat::from_path(p) == Some(NetlistFormat::Isc) || !has_isc(p));
    Ok(files)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directory_prefers_isc() {
        let dir = tempfile::tempdir().unwrap();
        for f in ["b.bench", "a.isc", "a.bench", "notes.txt"] {
            std::fs::write(dir.path().join(f), "").unwrap();
        }
        let found = discover(&[dir.path().to_path_buf()]).unwrap();
        let names: Vec<_> = found
            .iter()
            .map(|p| p.file_name().unwrap().to_str().unwrap())
            .collect();
        assert_eq!(names, ["a.isc", "b.bench"]);
    }

    #[test]
    fn empty_directory_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        assert!(discover(&[dir.path().to_path_buf()]).is_err());
    }
}
