use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ReportError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameter {
    Clique,
    Sepset,
    Cutset,
}

impl Parameter {
    pub const ALL: [Parameter; 3] = [Parameter::Clique, Parameter::Sepset, Parameter::Cutset];

    pub fn as_str(self) -> &'static str {
        match self {
            Parameter::Clique => "clique",
            Parameter::Sepset => "sepset",
            Parameter::Cutset => "cutset",
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Exact frequencies with unit-width bins.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Histogram {
    pub parameter: Parameter,
    pub bins: BTreeMap<usize, usize>,
    pub total: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct BinRecord {
    parameter: Parameter,
    size: usize,
    count: usize,
}

impl Histogram {
    /// Number of items strictly larger than `size`.
    pub fn count_above(&self, size: usize) -> usize {
        self.bins.range(size + 1..).map(|(_, c)| c).sum()
    }

    pub fn max_size(&self) -> Option<usize> {
        self.bins.keys().next_back().copied()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serialises")
    }

    pub fn from_json(text: &str) -> Result<Self, ReportError> {
        let h: Histogram = serde_json::from_str(text)?;
        if h.bins.values().sum::<usize>() != h.total {
            return Err(ReportError::Format("histogram total mismatch".into()));
        }
        Ok(h)
    }
}

/// CSV of several histograms: `parameter,size,count`.
pub fn histograms_to_csv(hs: &[Histogram]) -> Result<String, ReportError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for h in hs {
        for (&size, &count) in &h.bins {
            w.serialize(BinRecord {
                parameter: h.parameter,
                size,
                count,
            })?;
        }
    }
    if hs.iter().all(|h| h.bins.is_empty()) {
        w.write_record(["parameter", "size", "count"])?;
    }
    finish(w)
}

pub fn histograms_from_csv(text: &str) -> Result<Vec<Histogram>, ReportError> {
    let mut out: Vec<Histogram> = Vec::new();
    for rec in csv::Reader::from_reader(text.as_bytes()).deserialize() {
        let rec: BinRecord = rec?;
        let h = match out.last_mut() {
            Some(h) if h.parameter == rec.parameter => h,
            _ => {
                out.push(Histogram {
                    parameter: rec.parameter,
                    bins: BTreeMap::new(),
                    total: 0,
                });
                out.last_mut().expect("just pushed")
            }
        };
        *h.bins.entry(rec.size).or_default() += rec.count;
        h.total += rec.count;
    }
    Ok(out)
}

pub(crate) fn finish(w: csv::Writer<Vec<u8>>) -> Result<String, ReportError> {
    let bytes = w
        .into_inner()
        .map_err(|e| ReportError::Io(e.into_error()))?;
    String::from_utf8(bytes).map_err(|e| ReportError::Format(e.to_string()))
}

pub fn histogram(parameter: Parameter, sizes: &[usize]) -> Histogram {
    let mut bins = BTreeMap::new();
    for &s in sizes {
        *bins.entry(s).or_insert(0) += 1;
    }
    Histogram {
        parameter,
        bins,
        total: sizes.len(),
    }
}

/// Smallest range `(min, x)` of the sorted sizes that covers at least
/// `ceil(q * total)` items, counting from the smallest. `None` when empty.
pub fn quantile_range(sizes: &[usize], q: f64) -> Option<(usize, usize)> {
    if sizes.is_empty() {
        return None;
    }
    let mut sorted = sizes.to_vec();
    sorted.sort_unstable();
    let n = sorted.len();
    // Guard against 0.9 * 10 = 9.000000000000002.
    let need = ((q.clamp(0.0, 1.0) * n as f64) - 1e-9).ceil().max(1.0) as usize;
    Some((sorted[0], sorted[need.min(n) - 1]))
}
