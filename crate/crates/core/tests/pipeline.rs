use std::path::PathBuf;

use spa_core::analysis::{check_run, Prepared};
use spa_core::jointree::CliqueTree;
use spa_core::netlist::{load_netlist, parse_netlist, write_bench, NetlistFormat};
use spa_core::report::{
    export_dot, histogram, histograms_from_csv, histograms_to_csv, rows_from_csv, rows_from_json,
    rows_to_csv, rows_to_json, series_from_csv, series_to_csv, structural_table, HybridRule,
    Parameter,
};
use spa_core::tradeoff::tradeoff_series;
use spa_core::{Dag, Heuristic, TieBreak, UGraph};

fn c17_path(ext: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../../data/iscas85/c17.{ext}"))
}

fn c17() -> Prepared {
    Prepared::load(&c17_path("isc")).unwrap()
}

#[test]
fn isc_and_bench_agree_on_c17() {
    let a = c17();
    let b = Prepared::load(&c17_path("bench")).unwrap();
    assert_eq!(a.dag.len(), b.dag.len());
    assert_eq!(a.moral.edge_count(), b.moral.edge_count());
    assert_eq!((a.dag.len(), a.moral.edge_count()), (11, 18));
    assert_eq!(a.dag.edge_count(), 12);
    assert_eq!(a.dag.outputs().len(), 2);
}

#[test]
fn c17_circuit_counts() {
    let c = load_netlist(&c17_path("isc")).unwrap();
    assert_eq!(c.name, "c17");
    assert_eq!(c.inputs.len(), 5);
    assert_eq!(c.outputs.len(), 2);
    assert_eq!(c.gates.len(), 6);
}

#[test]
fn c17_bench_round_trip() {
    let c = load_netlist(&c17_path("bench")).unwrap();
    let text = write_bench(&c);
    let back = parse_netlist(&text, NetlistFormat::Bench).unwrap();
    assert_eq!(write_bench(&back), text);
}

#[test]
fn c17_every_ordering_is_valid() {
    let p = c17();
    for h in Heuristic::ALL {
        let run = p.run(h, TieBreak::Index).unwrap();
        check_run(&run).unwrap();
        assert_eq!(run.tree.components(), 1);
    }
}

#[test]
fn c17_series_runs_from_primary_to_single_cluster() {
    let p = c17();
    let run = p.run(Heuristic::MinDegree, TieBreak::Index).unwrap();
    let s = tradeoff_series(&run.tree, &p.moral, &p.name);
    let first = s.points.first().unwrap();
    let last = s.points.last().unwrap();
    assert_eq!(first.sep_bound, 2);
    assert_eq!(first.max_cluster, 3);
    assert_eq!(last.sep_bound, 0);
    assert_eq!(last.clusters, 1);
    assert_eq!(last.max_cluster, 11);
    assert_eq!(last.max_cutset, 3);
}

#[test]
fn c17_structural_row() {
    let rows = structural_table(&[c17()], TieBreak::Index, None).unwrap();
    let r = &rows[0];
    assert_eq!(r.nodes, Some(11));
    assert_eq!(r.moral_edges, Some(18));
    assert_eq!(r.cutset, Some(3));
    assert_eq!(r.hybrid_rule, Some(HybridRule::Reference));
    assert_eq!(r.orderings.len(), 4);
}

#[test]
fn report_files_round_trip() {
    let rows = structural_table(&[c17()], TieBreak::Index, Some(1)).unwrap();
    let csv = rows_to_csv(&rows).unwrap();
    assert_eq!(rows_to_csv(&rows_from_csv(&csv).unwrap()).unwrap(), csv);
    let json = rows_to_json(&rows).unwrap();
    assert_eq!(rows_to_json(&rows_from_json(&json).unwrap()).unwrap(), json);
}

#[test]
fn series_and_histograms_round_trip() {
    let p = c17();
    let run = p.run(Heuristic::MinWidth, TieBreak::Index).unwrap();
    let s = tradeoff_series(&run.tree, &p.moral, &p.name);
    let csv = series_to_csv(std::slice::from_ref(&s)).unwrap();
    assert_eq!(series_from_csv(&csv).unwrap(), vec![s]);

    let hs = vec![
        histogram(Parameter::Clique, &run.tree.cluster_sizes()),
        histogram(Parameter::Sepset, &run.tree.separator_sizes()),
    ];
    let text = histograms_to_csv(&hs).unwrap();
    assert_eq!(
        histograms_to_csv(&histograms_from_csv(&text).unwrap()).unwrap(),
        text
    );
}

#[test]
fn graph_dag_and_tree_json_round_trip() {
    let p = c17();
    let g = UGraph::from_json(&p.moral.to_json()).unwrap();
    assert_eq!(g.to_json(), p.moral.to_json());
    let d = Dag::from_json(&p.dag.to_json()).unwrap();
    assert_eq!(d.to_json(), p.dag.to_json());
    let t = p.run(Heuristic::Causal, TieBreak::Index).unwrap().tree;
    let back = CliqueTree::from_json(&t.to_json()).unwrap();
    assert_eq!(back.to_json(), t.to_json());
}

#[test]
fn dot_lists_every_cluster_and_edge() {
    let t = c17()
        .run(Heuristic::MinDegree, TieBreak::Index)
        .unwrap()
        .tree;
    let dot = export_dot(&t, "c17");
    assert_eq!(dot.matches(" -- ").count(), t.edges.len());
    assert_eq!(dot.matches("];").count(), t.len() + t.edges.len() + 1);
}

#[test]
fn random_tie_break_is_reproducible() {
    let p = c17();
    let a = p
        .run(Heuristic::MinDegree, TieBreak::Random { seed: 7 })
        .unwrap();
    let b = p
        .run(Heuristic::MinDegree, TieBreak::Random { seed: 7 })
        .unwrap();
    assert_eq!(a.ordering.nodes, b.ordering.nodes);
    check_run(&a).unwrap();
}

#[test]
fn malformed_netlists_are_rejected() {
    assert!(parse_netlist("", NetlistFormat::Bench).is_err());
    assert!(parse_netlist("INPUT(a)\nOUTPUT(y)\ny = AND(a, b)\n", NetlistFormat::Bench).is_err());
    assert!(parse_netlist("INPUT(a)\nOUTPUT(y)\ny = DFF(a)\n", NetlistFormat::Bench).is_err());
    assert!(parse_netlist("1 1gat inpt 1 0\n2 2gat bogus 0 1\n1\n", NetlistFormat::Isc).is_err());
}
