use serde::{Deserialize, Serialize};

use super::histogram::finish;
use crate::error::ReportError;
use crate::ordering::Heuristic;
use crate::tradeoff::{DecompositionPoint, TradeoffSeries};

pub const SERIES_HEADER: &str =
    "circuit,ordering,sep_bound,max_cluster,max_cutset,clusters,time_exp,space_exp";

#[derive(Debug, Serialize, Deserialize)]
struct SeriesRecord {
    circuit: String,
    ordering: Heuristic,
    sep_bound: usize,
    max_cluster: usize,
    max_cutset: usize,
    clusters: usize,
    time_exp: usize,
    space_exp: usize,
}

/// CSV with one row per point, header [`SERIES_HEADER`].
pub fn series_to_csv(series: &[TradeoffSeries]) -> Result<String, ReportError> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    w.write_record(SERIES_HEADER.split(','))?;
    for s in series {
        for p in &s.points {
            w.serialize(SeriesRecord {
                circuit: s.circuit.clone(),
                ordering: s.ordering,
                sep_bound: p.sep_bound,
                max_cluster: p.max_cluster,
                max_cutset: p.max_cutset,
                clusters: p.clusters,
                time_exp: p.time_exp,
                space_exp: p.space_exp,
            })?;
        }
    }
    finish(w)
}

/// Inverse of [`series_to_csv`]; consecutive rows sharing circuit and
/// ordering form one series.
pub fn series_from_csv(text: &str) -> Result<Vec<TradeoffSeries>, ReportError> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = rdr.headers()?.iter().map(str::to_string).collect();
    if header.join(",") != SERIES_HEADER {
        return Err(ReportError::Format(format!(
            "unexpected series header `{}`",
            header.join(",")
        )));
    }
    let mut out: Vec<TradeoffSeries> = Vec::new();
    for rec in rdr.deserialize() {
        let r: SeriesRecord = rec?;
        let point = DecompositionPoint {
            sep_bound: r.sep_bound,
            max_cluster: r.max_cluster,
            max_cutset: r.max_cutset,
            clusters: r.clusters,
            time_exp: r.time_exp,
            space_exp: r.space_exp,
        };
        match out.last_mut() {
            Some(s) if s.circuit == r.circuit && s.ordering == r.ordering => s.points.push(point),
            _ => out.push(TradeoffSeries {
                circuit: r.circuit,
                ordering: r.ordering,
                points: vec![point],
            }),
        }
    }
    Ok(out)
}

pub fn series_to_json(series: &[TradeoffSeries]) -> Result<String, ReportError> {
    Ok(serde_json::to_string_pretty(series)?)
}

pub fn series_from_json(text: &str) -> Result<Vec<TradeoffSeries>, ReportError> {
    Ok(serde_json::from_str(text)?)
}
