//! Orbital graphs of finite permutation groups and detection of *futile*
//! orbital graphs, i.e. those that give partition backtrack no refining power
//! beyond the orbit partition.
//!
//! Points are the integers `1..=n`, and permutations act on the right:
//! `p.compose(&q)` applies `p` first.
//!
//! ```
//! use orbitals::{build_orbital_graph, is_futile_fast, PermGroup};
//!
//! let h = PermGroup::from_cycles(7, &["(2,3)", "(4,6)"]).unwrap();
//! let g = build_orbital_graph(&h, 3, 4).unwrap();
//! assert_eq!(g.arcs(), &[(2, 4), (2, 6), (3, 4), (3, 6)]);
//! assert!(is_futile_fast(&h, 3, 4).unwrap());
//! ```

pub mod chain;
pub mod error;
pub mod futility;
pub mod group;
pub mod io;
pub mod orbital;
pub mod partition;
pub mod perm;
pub mod refine;
pub mod report;

pub use chain::StabChain;
pub use error::{Error, Result};
pub use futility::{
    arc_count_bounds, find_witness, futility_by_stabilizer_transitivity, is_futile_fast, is_futile_oracle,
    is_futile_structural, transitive_group_futility, ArcCountBounds, FutilityVerdict, Shape, Witness,
};
pub use group::PermGroup;
pub use orbital::{
    arc_count_formula, build_orbital_graph, components_pairwise_isomorphic, enumerate_base_pairs,
    enumerate_distinct_base_pairs, graphs_equal, is_self_paired, isolated_vertices, pair_tracing_element,
    weak_components, Arc, OrbitalGraph,
};
pub use partition::{partition_stabilizer_generators, OrderedPartition};
pub use perm::Permutation;
pub use refine::{individualize, refine_by_graph, select_useful_graphs, RefinementTrace};
pub use report::{AnalysisReport, ReportRow};
