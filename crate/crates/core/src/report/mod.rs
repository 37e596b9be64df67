//! Tables, histograms, quantiles, tradeoff series files and DOT renderings.

mod dot;
mod histogram;
mod series;
mod table;

pub use dot::export_dot;
pub use histogram::{
    histogram, histograms_from_csv, histograms_to_csv, quantile_range, Histogram, Parameter,
};
pub use series::{series_from_csv, series_from_json, series_to_csv, series_to_json, SERIES_HEADER};
pub use table::{
    ordering_comparison, reference_hybrid_bound, rows_from_csv, rows_from_json, rows_to_csv,
    rows_to_json, select_hybrid, structural_row, structural_table, HybridRule, OrderingResult,
    ReportRow, Triple, REFERENCE_HYBRID_BOUNDS,
};

/// Output file name: `<circuit>_<ordering>_<artifact>.<ext>`.
pub fn artifact_file_name(circuit: &str, ordering: &str, artifact: &str, ext: &str) -> String {
    format!("{circuit}_{ordering}_{artifact}.{ext}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_names() {
        assert_eq!(
            artifact_file_name("c432", "min-degree", "series", "csv"),
            "c432_min-degree_series.csv"
        );
    }
}
