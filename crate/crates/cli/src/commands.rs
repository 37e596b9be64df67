use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use spa_core::analysis::{check_run, Prepared};
use spa_core::graph::{cutset_exact, cutset_heuristic, is_forest_without, treewidth_exact};
use spa_core::report::{
    artifact_file_name, export_dot, histogram, histograms_to_csv, rows_to_csv, rows_to_json,
    series_to_csv, series_to_json, structural_row, OrderingResult, Parameter, ReportRow,
};
use spa_core::tradeoff::{
    cluster_cutsets, merge_by_separator, secondary_tree, series_thresholds, tradeoff_series,
    CutsetCache,
};
use spa_core::{Heuristic, TradeoffSeries};

use crate::config::{Format, RunConfig};
use crate::exec::{exit_code, report_failures, run_all, Failure, Job};
use crate::output::{emit, write_atomic};

fn invariant_err(e: impl std::fmt::Display) -> Failure {
    Failure::Invariant(e.to_string())
}

#[derive(Serialize)]
struct ParseSummary {
    nodes: usize,
    moral_edges: usize,
}

pub fn parse(file: &Path, moral: Option<&Path>, dag: Option<&Path>) -> Result<u8> {
    let p = Prepared::load(file)?;
    let dump = |target: &Path, body: String| -> Result<()> {
        let dir = target.parent().filter(|d| !d.as_os_str().is_empty());
        let name = target
            .file_name()
            .and_then(|n| n.to_str())
            .context("dump path needs a file name")?;
        write_atomic(dir.unwrap_or(Path::new(".")), name, &body)
    };
    if let Some(path) = moral {
        dump(path, p.moral.to_json())?;
    }
    if let Some(path) = dag {
        dump(path, p.dag.to_json())?;
    }
    let summary = ParseSummary {
        nodes: p.dag.len(),
        moral_edges: p.moral.edge_count(),
    };
    println!("{}", serde_json::to_string(&summary)?);
    Ok(0)
}

pub fn analyze(cfg: &RunConfig) -> Result<u8> {
    let orderings = cfg.orderings.clone();
    let primary = cfg.primary();
    let (tie, bound) = (cfg.tie, cfg.sep_bound);
    let jobs = run_all(cfg, move |p: &Prepared| {
        let mut results = Vec::new();
        let mut primary_run = None;
        for &h in &orderings {
            let run = p.run(h, tie).map_err(invariant_err)?;
            results.push(OrderingResult {
                heuristic: h,
                max_clique: run.max_clique(),
                max_sepset: run.max_sepset(),
            });
            if h == primary {
                primary_run = Some(run);
            }
        }
        let run = primary_run.expect("primary ordering is among the selected");
        let series = tradeoff_series(&run.tree, &p.moral, &p.name);
        Ok(structural_row(p, &run, &series, results, bound))
    });
    report_failures(&jobs);
    let rows: Vec<ReportRow> = jobs
        .iter()
        .map(|j| match &j.result {
            Ok(r) => r.clone(),
            Err(f) => ReportRow::missing(&j.circuit, f.reason()),
        })
        .collect();
    let body = match cfg.format {
        Format::Csv => rows_to_csv(&rows)?,
        Format::Json => rows_to_json(&rows)? + "\n",
    };
    emit(
        cfg.out.as_deref(),
        &[(format!("analysis.{}", cfg.format.ext()), body)],
    )?;
    Ok(exit_code(&jobs))
}

fn per_ordering<T, F>(cfg: &RunConfig, f: F) -> Vec<Job<Vec<(Heuristic, T)>>>
where
    T: Send + 'static,
    F: Fn(&Prepared, Heuristic) -> Result<T, Failure> + Send + Sync + Clone + 'static,
{
    let orderings = cfg.orderings.clone();
    run_all(cfg, move |p: &Prepared| {
        orderings.iter().map(|&h| Ok((h, f(p, h)?))).collect()
    })
}

/// Flatten successful jobs into named artifacts.
fn artifacts<T>(
    jobs: &[Job<Vec<(Heuristic, T)>>],
    artifact: &str,
    ext: &str,
    render: impl Fn(&T) -> Result<String>,
) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for j in jobs {
        if let Ok(items) = &j.result {
            for (h, item) in items {
                let name = artifact_file_name(&j.circuit, h.as_str(), artifact, ext);
                out.push((name, render(item)?));
            }
        }
    }
    Ok(out)
}

pub fn tradeoff(cfg: &RunConfig) -> Result<u8> {
    let tie = cfg.tie;
    let jobs = per_ordering(cfg, move |p, h| {
        let run = p.run(h, tie).map_err(invariant_err)?;
        Ok(tradeoff_series(&run.tree, &p.moral, &p.name))
    });
    report_failures(&jobs);
    let format = cfg.format;
    let files = artifacts(&jobs, "series", format.ext(), |s: &TradeoffSeries| {
        Ok(match format {
            Format::Csv => series_to_csv(std::slice::from_ref(s))?,
            Format::Json => series_to_json(std::slice::from_ref(s))? + "\n",
        })
    })?;
    emit(cfg.out.as_deref(), &files)?;
    Ok(exit_code(&jobs))
}

pub fn histograms(cfg: &RunConfig) -> Result<u8> {
    let tie = cfg.tie;
    let jobs = per_ordering(cfg, move |p, h| {
        let run = p.run(h, tie).map_err(invariant_err)?;
        let cutsets = cluster_cutsets(&run.tree, &p.moral);
        Ok(vec![
            histogram(Parameter::Clique, &run.tree.cluster_sizes()),
            histogram(Parameter::Sepset, &run.tree.separator_sizes()),
            histogram(Parameter::Cutset, &cutsets),
        ])
    });
    report_failures(&jobs);
    let format = cfg.format;
    let files = artifacts(&jobs, "histogram", format.ext(), |hs| {
        Ok(match format {
            Format::Csv => histograms_to_csv(hs)?,
            Format::Json => serde_json::to_string_pretty(hs)? + "\n",
        })
    })?;
    emit(cfg.out.as_deref(), &files)?;
    Ok(exit_code(&jobs))
}

pub fn tree(cfg: &RunConfig, dot: bool) -> Result<u8> {
    let (tie, bound) = (cfg.tie, cfg.sep_bound);
    let jobs = per_ordering(cfg, move |p, h| {
        let run = p.run(h, tie).map_err(invariant_err)?;
        let t = match bound {
            Some(b) => merge_by_separator(&run.tree, b),
            None => run.tree,
        };
        t.validate().map_err(invariant_err)?;
        Ok(if dot {
            export_dot(&t, &format!("{}_{}", p.name, h.as_str()))
        } else {
            t.to_json() + "\n"
        })
    });
    report_failures(&jobs);
    let ext = if dot { "dot" } else { "json" };
    let files = artifacts(&jobs, "tree", ext, |s: &String| Ok(s.clone()))?;
    emit(cfg.out.as_deref(), &files)?;
    Ok(exit_code(&jobs))
}

#[derive(Debug, Serialize)]
struct VerifyRecord {
    circuit: String,
    status: &'static str,
    checks: usize,
    detail: Option<String>,
}

pub fn verify(cfg: &RunConfig) -> Result<u8> {
    let (tie, limit) = (cfg.tie, cfg.oracle_limit);
    let orderings = cfg.orderings.clone();
    let jobs = run_all(cfg, move |p: &Prepared| {
        let mut checks = 0;
        let mut problems = Vec::new();
        for &h in &orderings {
            let run = p.run(h, tie).map_err(invariant_err)?;
            checks += 1;
            if let Err(e) = check_run(&run) {
                problems.push(format!("{h}: {e}"));
            }
            if p.moral.len() <= limit {
                if let Ok(tw) = treewidth_exact(&p.moral) {
                    checks += 1;
                    if tw > run.induced_width() {
                        problems.push(format!("{h}: induced width below exact treewidth {tw}"));
                    }
                }
            }
            let components = p.moral.components().len();
            let mut cache = CutsetCache::new();
            for b in series_thresholds(&run.tree) {
                let (t, _) = secondary_tree(&run.tree, &p.moral, b, &mut cache);
                checks += 1;
                if let Err(e) = t.validate() {
                    problems.push(format!("{h}, bound {b}: {e}"));
                }
                if t.separator_width() > b {
                    problems.push(format!("{h}, bound {b}: separator exceeds bound"));
                }
                if b == 0 && t.len() != components {
                    problems.push(format!(
                        "{h}: bound 0 gives {} clusters for {components} components",
                        t.len()
                    ));
                }
                for c in &t.clusters {
                    let sub = p.moral.induced_subgraph(c);
                    let cut = cutset_heuristic(&sub);
                    checks += 1;
                    if !is_forest_without(&sub, &cut) {
                        problems.push(format!("{h}, bound {b}: cluster cutset leaves a cycle"));
                    }
                    if sub.len() <= limit {
                        if let Ok(exact) = cutset_exact(&sub) {
                            checks += 1;
                            if exact.len() > cut.len() {
                                problems.push(format!("{h}, bound {b}: cutset below optimum"));
                            }
                        }
                    }
                }
            }
        }
        let whole = cutset_heuristic(&p.moral);
        checks += 1;
        if !is_forest_without(&p.moral, &whole) {
            problems.push("whole-graph cutset leaves a cycle".into());
        }
        if problems.is_empty() {
            Ok(checks)
        } else {
            Err(Failure::Invariant(problems.join("; ")))
        }
    });
    let records: Vec<VerifyRecord> = jobs
        .iter()
        .map(|j| match &j.result {
            Ok(checks) => VerifyRecord {
                circuit: j.circuit.clone(),
                status: "ok",
                checks: *checks,
                detail: None,
            },
            Err(f) => VerifyRecord {
                circuit: j.circuit.clone(),
                status: match f {
                    Failure::Input(_) => "input-error",
                    Failure::Invariant(_) => "violation",
                    Failure::Timeout(_) => "timeout",
                },
                checks: 0,
                detail: Some(f.reason().to_string()),
            },
        })
        .collect();
    let body = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&records)? + "\n",
        Format::Csv => {
            let mut s = String::from("circuit,status,checks,detail\n");
            for r in &records {
                let detail = r.detail.as_deref().unwrap_or("").replace('"', "\"\"");
                s.push_str(&format!(
                    "{},{},{},\"{detail}\"\n",
                    r.circuit, r.status, r.checks
                ));
            }
            s
        }
    };
    emit(
        cfg.out.as_deref(),
        &[(format!("verify.{}", cfg.format.ext()), body)],
    )?;
    Ok(exit_code(&jobs))
}
