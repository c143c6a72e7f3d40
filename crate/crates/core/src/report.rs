use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::futility::{is_futile_fast, is_futile_oracle, is_futile_structural, FutilityVerdict};
use crate::group::PermGroup;
use crate::orbital::{
    build_orbital_graph, enumerate_base_pairs, enumerate_distinct_base_pairs, is_self_paired, weak_components, Arc,
};

#[derive(Clone, Debug, Serialize)]
pub struct GroupSummary {
    pub degree: usize,
    pub generators: Vec<String>,
    pub order: String,
    pub orbit_partition: Vec<Vec<usize>>,
    pub transitivity_degree: usize,
}

impl GroupSummary {
    pub fn new(group: &PermGroup) -> Self {
        GroupSummary {
            degree: group.degree(),
            generators: group.generators().iter().map(|g| g.to_string()).collect(),
            order: group.order().to_string(),
            orbit_partition: group.orbit_partition().cells().to_vec(),
            transitivity_degree: group.transitivity_degree(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub base_pair: Arc,
    pub arc_count: usize,
    pub self_paired: bool,
    pub fast: bool,
    pub structural: bool,
    pub oracle: bool,
    pub shape: &'static str,
    /// Sizes of the weakly connected components, largest first.
    pub component_sizes: Vec<usize>,
    #[serde(skip)]
    pub verdict: FutilityVerdict,
}

impl ReportRow {
    pub fn analyse(group: &PermGroup, (alpha, beta): Arc) -> Result<Self> {
        let graph = build_orbital_graph(group, alpha, beta)?;
        let verdict = is_futile_structural(&graph, group)?;
        let mut component_sizes: Vec<usize> = weak_components(&graph).cells().iter().map(Vec::len).collect();
        component_sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(ReportRow {
            base_pair: (alpha, beta),
            arc_count: graph.arc_count(),
            self_paired: is_self_paired(&graph),
            fast: is_futile_fast(group, alpha, beta)?,
            structural: verdict.futile,
            oracle: is_futile_oracle(&graph, group)?,
            shape: verdict.shape.name(),
            component_sizes,
            verdict,
        })
    }

    /// All three futility deciders agree.
    pub fn agrees(&self) -> bool {
        self.fast == self.structural && self.structural == self.oracle
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub group: GroupSummary,
    pub rows: Vec<ReportRow>,
}

impl AnalysisReport {
    /// Analyses every enumerated base-pair (or only graph-distinct ones).
    /// Rows are computed in parallel and kept in enumeration order.
    pub fn new(group: &PermGroup, dedup: bool) -> Result<Self> {
        let pairs = if dedup {
            enumerate_distinct_base_pairs(group)
        } else {
            enumerate_base_pairs(group)
        };
        let rows = pairs
            .par_iter()
            .map(|&pair| ReportRow::analyse(group, pair))
            .collect::<Result<Vec<_>>>()?;
        Ok(AnalysisReport {
            group: GroupSummary::new(group),
            rows,
        })
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.agrees())
    }
}
