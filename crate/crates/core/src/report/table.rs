use serde::{Deserialize, Serialize};

use super::histogram::finish;
use crate::analysis::{run_ordering, OrderedRun, Prepared};
use crate::error::{ReportError, Result};
use crate::graph::{cutset_heuristic, UGraph};
use crate::netlist::Dag;
use crate::ordering::{Heuristic, TieBreak};
use crate::tradeoff::{tradeoff_series, DecompositionPoint, TradeoffSeries};

/// Max clique and max sepset of the primary tree for one ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingResult {
    pub heuristic: Heuristic,
    pub max_clique: usize,
    pub max_sepset: usize,
}

/// `(clique, cutset, separator)` of one decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triple {
    pub clique: usize,
    pub cutset: usize,
    pub separator: usize,
}

impl From<&DecompositionPoint> for Triple {
    fn from(p: &DecompositionPoint) -> Self {
        Triple {
            clique: p.max_cluster,
            cutset: p.max_cutset,
            separator: p.sep_bound,
        }
    }
}

/// How the hybrid point of a row was chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HybridRule {
    /// Separator bound given by the caller.
    Explicit,
    /// Reference bound for a known benchmark.
    Reference,
    /// Point minimising time plus space exponent.
    Knee,
}

/// Separator bounds at which the reference hybrid decompositions of the
/// standard benchmarks are reported.
pub const REFERENCE_HYBRID_BOUNDS: &[(&str, usize)] = &[
    ("c17", 2),
    ("c432", 6),
    ("c499", 6),
    ("c880", 5),
    ("c1355", 3),
    ("c1908", 4),
    ("c2670", 5),
    ("c6288", 16),
];

pub fn reference_hybrid_bound(circuit: &str) -> Option<usize> {
    let key = circuit.to_ascii_lowercase();
    REFERENCE_HYBRID_BOUNDS
        .iter()
        .find(|(name, _)| *name == key)
        .map(|&(_, b)| b)
}

/// One circuit's structural summary. Missing values are `None` with the
/// reason recorded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub circuit: String,
    /// Variable count, the exponent of brute-force enumeration.
    pub nodes: Option<usize>,
    pub moral_edges: Option<usize>,
    pub components: Option<usize>,
    /// Whole-graph cycle-cutset size (pure conditioning).
    pub cutset: Option<usize>,
    /// Primary tree (pure clustering).
    pub clustering: Option<Triple>,
    pub hybrid: Option<Triple>,
    pub hybrid_rule: Option<HybridRule>,
    pub orderings: Vec<OrderingResult>,
    pub reason: Option<String>,
}

impl ReportRow {
    pub fn missing(circuit: impl Into<String>, reason: impl Into<String>) -> Self {
        ReportRow {
            circuit: circuit.into(),
            nodes: None,
            moral_edges: None,
            components: None,
            cutset: None,
            clustering: None,
            hybrid: None,
            hybrid_rule: None,
            orderings: Vec::new(),
            reason: Some(reason.into()),
        }
    }

    pub fn ordering(&self, h: Heuristic) -> Option<&OrderingResult> {
        self.orderings.iter().find(|o| o.heuristic == h)
    }
}

/// Run every ordering end to end. `Causal` is skipped without a DAG.
pub fn ordering_comparison(
    moral: &UGraph,
    dag: Option<&Dag>,
    tie: TieBreak,
) -> Result<Vec<OrderingResult>> {
    Heuristic::ALL
        .into_iter()
        .filter(|&h| h != Heuristic::Causal || dag.is_some())
        .map(|h| {
            let run = run_ordering(moral, dag, h, tie)?;
            Ok(OrderingResult {
                heuristic: h,
                max_clique: run.max_clique(),
                max_sepset: run.max_sepset(),
            })
        })
        .collect()
}

/// Pick the hybrid point: an explicit bound, else the benchmark's reference
/// bound, else the knee. A bound picks the first point whose separator does
/// not exceed it.
pub fn select_hybrid(
    series: &TradeoffSeries,
    explicit: Option<usize>,
) -> Option<(&DecompositionPoint, HybridRule)> {
    let by_bound = |b: usize| series.points.iter().find(|p| p.sep_bound <= b);
    if let Some(b) = explicit {
        return by_bound(b).map(|p| (p, HybridRule::Explicit));
    }
    if let Some(p) = reference_hybrid_bound(&series.circuit).and_then(by_bound) {
        return Some((p, HybridRule::Reference));
    }
    series
        .points
        .iter()
        .min_by_key(|p| (p.time_exp + p.space_exp, p.space_exp))
        .map(|p| (p, HybridRule::Knee))
}

/// Assemble a row from already computed pieces.
pub fn structural_row(
    prepared: &Prepared,
    primary: &OrderedRun,
    series: &TradeoffSeries,
    orderings: Vec<OrderingResult>,
    sep_bound: Option<usize>,
) -> ReportRow {
    let clustering = series.points.first().map(|p| Triple {
        clique: primary.max_clique(),
        cutset: p.max_cutset,
        separator: primary.max_sepset(),
    });
    let hybrid = select_hybrid(series, sep_bound);
    ReportRow {
        circuit: prepared.name.clone(),
        nodes: Some(prepared.dag.len()),
        moral_edges: Some(prepared.moral.edge_count()),
        components: Some(primary.tree.components()),
        cutset: Some(cutset_heuristic(&prepared.moral).len()),
        clustering,
        hybrid: hybrid.map(|(p, _)| Triple::from(p)),
        hybrid_rule: hybrid.map(|(_, r)| r),
        orderings,
        reason: None,
    }
}

/// Full row for each circuit using the min-degree primary tree.
pub fn structural_table(
    circuits: &[Prepared],
    tie: TieBreak,
    sep_bound: Option<usize>,
) -> Result<Vec<ReportRow>> {
    circuits
        .iter()
        .map(|p| {
            let primary = p.run(Heuristic::MinDegree, tie)?;
            let series = tradeoff_series(&primary.tree, &p.moral, &p.name);
            let orderings = ordering_comparison(&p.moral, Some(&p.dag), tie)?;
            Ok(structural_row(p, &primary, &series, orderings, sep_bound))
        })
        .collect()
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct FlatRow {
    circuit: String,
    nodes: Option<usize>,
    moral_edges: Option<usize>,
    components: Option<usize>,
    cutset: Option<usize>,
    clique: Option<usize>,
    clique_cutset: Option<usize>,
    separator: Option<usize>,
    hybrid_clique: Option<usize>,
    hybrid_cutset: Option<usize>,
    hybrid_separator: Option<usize>,
    hybrid_rule: Option<HybridRule>,
    mdo_clique: Option<usize>,
    mdo_sepset: Option<usize>,
    mco_clique: Option<usize>,
    mco_sepset: Option<usize>,
    mwo_clique: Option<usize>,
    mwo_sepset: Option<usize>,
    co_clique: Option<usize>,
    co_sepset: Option<usize>,
    reason: Option<String>,
}

fn ordering_slots(f: &mut FlatRow, h: Heuristic) -> (&mut Option<usize>, &mut Option<usize>) {
    match h {
        Heuristic::MinDegree => (&mut f.mdo_clique, &mut f.mdo_sepset),
        Heuristic::MaxCardinality => (&mut f.mco_clique, &mut f.mco_sepset),
        Heuristic::MinWidth => (&mut f.mwo_clique, &mut f.mwo_sepset),
        Heuristic::Causal => (&mut f.co_clique, &mut f.co_sepset),
    }
}

impl From<&ReportRow> for FlatRow {
    fn from(r: &ReportRow) -> Self {
        let mut f = FlatRow {
            circuit: r.circuit.clone(),
            nodes: r.nodes,
            moral_edges: r.moral_edges,
            components: r.components,
            cutset: r.cutset,
            clique: r.clustering.map(|t| t.clique),
            clique_cutset: r.clustering.map(|t| t.cutset),
            separator: r.clustering.map(|t| t.separator),
            hybrid_clique: r.hybrid.map(|t| t.clique),
            hybrid_cutset: r.hybrid.map(|t| t.cutset),
            hybrid_separator: r.hybrid.map(|t| t.separator),
            hybrid_rule: r.hybrid_rule,
            reason: r.reason.clone(),
            ..Default::default()
        };
        for o in &r.orderings {
            let (c, s) = ordering_slots(&mut f, o.heuristic);
            *c = Some(o.max_clique);
            *s = Some(o.max_sepset);
        }
        f
    }
}

fn triple(c: Option<usize>, k: Option<usize>, s: Option<usize>) -> Option<Triple> {
    Some(Triple {
        clique: c?,
        cutset: k?,
        separator: s?,
    })
}

impl From<FlatRow> for ReportRow {
    fn from(mut f: FlatRow) -> Self {
        let orderings = Heuristic::ALL
            .into_iter()
            .filter_map(|h| {
                let (c, s) = ordering_slots(&mut f, h);
                Some(OrderingResult {
                    heuristic: h,
                    max_clique: (*c)?,
                    max_sepset: (*s)?,
                })
            })
            .collect();
        ReportRow {
            clustering: triple(f.clique, f.clique_cutset, f.separator),
            hybrid: triple(f.hybrid_clique, f.hybrid_cutset, f.hybrid_separator),
            circuit: f.circuit,
            nodes: f.nodes,
            moral_edges: f.moral_edges,
            components: f.components,
            cutset: f.cutset,
            hybrid_rule: f.hybrid_rule,
            orderings,
            reason: f.reason,
        }
    }
}

/// Flat CSV with one row per circuit; empty cells are missing values.
pub fn rows_to_csv(rows: &[ReportRow]) -> std::result::Result<String, ReportError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if rows.is_empty() {
        // header only, derived from an empty record
        let mut probe = csv::Writer::from_writer(Vec::new());
        probe.serialize(FlatRow::default())?;
        let text = finish(probe)?;
        return Ok(text.lines().next().unwrap_or_default().to_string() + "\n");
    }
    for r in rows {
        w.serialize(FlatRow::from(r))?;
    }
    finish(w)
}

pub fn rows_from_csv(text: &str) -> std::result::Result<Vec<ReportRow>, ReportError> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize::<FlatRow>()
        .map(|r| r.map(ReportRow::from).map_err(ReportError::from))
        .collect()
}

pub fn rows_to_json(rows: &[ReportRow]) -> std::result::Result<String, ReportError> {
    Ok(serde_json::to_string_pretty(rows)?)
}

pub fn rows_from_json(text: &str) -> std::result::Result<Vec<ReportRow>, ReportError> {
    Ok(serde_json::from_str(text)?)
}
