//! Partition refinement by orbital-graph degree signatures.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::futility::is_futile_fast;
use crate::group::PermGroup;
use crate::orbital::{build_orbital_graph, enumerate_base_pairs, Arc, OrbitalGraph};
use crate::partition::OrderedPartition;
use crate::perm::check_point;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementTrace {
    pub input: OrderedPartition,
    pub base_pair: Arc,
    pub output: OrderedPartition,
    /// Passes over the partition, including the final one that split nothing.
    pub rounds: usize,
    pub split_count: usize,
}

// Per current cell: (arcs from v into the cell, arcs into v from the cell).
type Signature = Vec<(usize, usize)>;

fn signature(graph: &OrbitalGraph, cell_of: &[usize], cells: usize, v: usize) -> Signature {
    let mut sig = vec![(0, 0); cells];
    for &w in graph.out_neighbors(v) {
        sig[cell_of[w]].0 += 1;
    }
    for &w in graph.in_neighbors(v) {
        sig[cell_of[w]].1 += 1;
    }
    sig
}

/// Splits cells by vertex signatures until nothing changes.
///
/// Each cell is replaced in place by its pieces, ordered by signature.
pub fn refine_by_graph(partition: &OrderedPartition, graph: &OrbitalGraph) -> Result<RefinementTrace> {
    if partition.degree() != graph.degree() {
        return Err(Error::DegreeMismatch {
            left: partition.degree(),
            right: graph.degree(),
        });
    }
    let mut cells = partition.cells().to_vec();
    let mut rounds = 0;
    loop {
        rounds += 1;
        let current = OrderedPartition::new(partition.degree(), cells.clone())?;
        let cell_of = current.cell_index();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            let mut groups: BTreeMap<Signature, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                groups
                    .entry(signature(graph, &cell_of, cells.len(), v))
                    .or_default()
                    .push(v);
            }
            next.extend(groups.into_values());
        }
        let changed = next.len() != cells.len();
        cells = next;
        if !changed {
            break;
        }
    }
    let output = OrderedPartition::new(partition.degree(), cells)?;
    Ok(RefinementTrace {
        input: partition.clone(),
        base_pair: graph.base_pair(),
        split_count: output.len() - partition.len(),
        output,
        rounds,
    })
}

/// Moves `point` into a singleton cell placed just before the rest of its
/// cell, as a search node of partition backtrack does.
pub fn individualize(partition: &OrderedPartition, point: usize) -> Result<OrderedPartition> {
    check_point(point, partition.degree())?;
    let mut cells = Vec::with_capacity(partition.len() + 1);
    for cell in partition.cells() {
        if cell.len() > 1 && cell.contains(&point) {
            cells.push(vec![point]);
            cells.push(cell.iter().copied().filter(|&p| p != point).collect());
        } else {
            cells.push(cell.clone());
        }
    }
    OrderedPartition::new(partition.degree(), cells)
}

/// Orbital graphs worth building: every enumerated base-pair that the fast
/// test does not reject. Futile graphs are never constructed.
pub fn select_useful_graphs(group: &PermGroup) -> Vec<(Arc, OrbitalGraph)> {
    enumerate_base_pairs(group)
        .into_iter()
        .filter(|&(a, b)| !is_futile_fast(group, a, b).expect("enumerated pairs are valid"))
        .map(|(a, b)| ((a, b), build_orbital_graph(group, a, b).expect("valid pair")))
        .collect()
}
