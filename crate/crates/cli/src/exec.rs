use std::path::{Path, PathBuf};
use std::sync::mpsc;
use std::time::Duration;

use rayon::prelude::*;
use spa_core::analysis::Prepared;

use crate::config::RunConfig;

/// Why a circuit produced no result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Input(String),
    Invariant(String),
    Timeout(String),
}

impl Failure {
    pub fn reason(&self) -> &str {
        match self {
            Failure::Input(r) | Failure::Invariant(r) | Failure::Timeout(r) => r,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Invariant(_) => 2,
            Failure::Timeout(_) => 3,
        }
    }
}

pub struct Job<T> {
    pub circuit: String,
    pub result: Result<T, Failure>,
}

pub fn circuit_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Load and process every input, in parallel up to the worker limit.
/// Results keep input order.
pub fn run_all<T, F>(cfg: &RunConfig, work: F) -> Vec<Job<T>>
where
    T: Send + 'static,
    F: Fn(&Prepared) -> Result<T, Failure> + Send + Sync + Clone + 'static,
{
    let run = || {
        cfg.inputs
            .par_iter()
            .map(|path| Job {
                circuit: circuit_name(path),
                result: run_one(path.clone(), cfg.timeout, work.clone()),
            })
            .collect()
    };
    match cfg.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    }
}

fn run_one<T, F>(path: PathBuf, timeout: Option<Duration>, work: F) -> Result<T, Failure>
where
    T: Send + 'static,
    F: Fn(&Prepared) -> Result<T, Failure> + Send + 'static,
{
    let task = move || {
        let p = Prepared::load(&path).map_err(|e| Failure::Input(e.to_string()))?;
        work(&p)
    };
    let Some(limit) = timeout else {
        return task();
    };
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let _ = tx.send(task());
    });
    match rx.recv_timeout(limit) {
        Ok(r) => r,
        Err(mpsc::RecvTimeoutError::Timeout) => Err(Failure::Timeout(format!(
            "timed out after {:.3} s",
            limit.as_secs_f64()
        ))),
        Err(mpsc::RecvTimeoutError::Disconnected) => {
            Err(Failure::Invariant("worker panicked".into()))
        }
    }
}

/// Highest exit code among failed jobs, 0 when all succeeded.
pub fn exit_code<T>(jobs: &[Job<T>]) -> u8 {
    jobs.iter()
        .filter_map(|j| j.result.as_ref().err())
        .map(Failure::exit_code)
        .max()
        .unwrap_or(0)
}

pub fn report_failures<T>(jobs: &[Job<T>]) {
    for j in jobs {
        if let Err(f) = &j.result {
            eprintln!("{}: {}", j.circuit, f.reason());
        }
    }
}
