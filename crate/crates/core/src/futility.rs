//! Futility of orbital graphs.
//!
//! A graph is futile when the stabilizer of the ordered orbit partition (the
//! direct product of the symmetric groups on the orbits) acts on it as graph
//! automorphisms, so it cannot refine anything the orbit partition does not
//! already give. Three independent deciders live here:
//!
//! * [`is_futile_fast`] uses orbit and stabilizer sizes only;
//! * [`is_futile_structural`] inspects the components of a built graph;
//! * [`is_futile_oracle`] checks the definition generator by generator.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::orbital::{arc_count_formula, check_built_from, weak_components, Arc, OrbitalGraph};
use crate::perm::{check_point, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    /// The unique nontrivial component is a complete digraph on one orbit.
    CompleteOnOrbit,
    /// The unique nontrivial component has arc set exactly `starts x ends`.
    CompleteBipartite { starts: Vec<usize>, ends: Vec<usize> },
    NotFutile,
}

impl Shape {
    pub fn name(&self) -> &'static str {
        match self {
            Shape::CompleteOnOrbit => "complete-on-orbit",
            Shape::CompleteBipartite { .. } => "complete-bipartite",
            Shape::NotFutile => "not-futile",
        }
    }
}

/// A partition-stabilizer element that breaks the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub permutation: Permutation,
    pub violated_arc: Arc,
    /// Image of `violated_arc`, which is not an arc.
    pub image: Arc,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FutilityVerdict {
    pub futile: bool,
    pub shape: Shape,
    /// Vertex set of the unique component of size at least two, when futile.
    pub component: Option<Vec<usize>>,
    pub witness: Option<Witness>,
}

fn check_pair(group: &PermGroup, alpha: usize, beta: usize) -> Result<()> {
    check_point(alpha, group.degree())?;
    check_point(beta, group.degree())?;
    if alpha == beta {
        return Err(Error::EqualBasePoints(alpha));
    }
    Ok(())
}

struct OrbitSizes {
    beta_in_alpha_orbit: bool,
    alpha_orbit: usize,
    beta_orbit: usize,
    beta_stab_orbit: usize,
}

fn orbit_sizes(group: &PermGroup, alpha: usize, beta: usize) -> Result<OrbitSizes> {
    check_pair(group, alpha, beta)?;
    let alpha_orbit = group.orbit(alpha)?;
    let beta_orbit = group.orbit(beta)?;
    let beta_stab_orbit = group.point_stabilizer(alpha)?.orbit(beta)?;
    Ok(OrbitSizes {
        beta_in_alpha_orbit: alpha_orbit.binary_search(&beta).is_ok(),
        alpha_orbit: alpha_orbit.len(),
        beta_orbit: beta_orbit.len(),
        beta_stab_orbit: beta_stab_orbit.len(),
    })
}

/// Decides futility from orbit sizes alone, without building the graph.
///
/// Futile iff either `beta` is in the orbit of `alpha` and the stabilizer of
/// `alpha` moves `beta` to every other point of that orbit, or `beta` is in a
/// different orbit which the stabilizer of `alpha` still acts on transitively.
pub fn is_futile_fast(group: &PermGroup, alpha: usize, beta: usize) -> Result<bool> {
    let s = orbit_sizes(group, alpha, beta)?;
    Ok(if s.beta_in_alpha_orbit {
        // beta^(H_alpha) sits inside alpha^H minus alpha.
        s.beta_stab_orbit + 1 == s.alpha_orbit
    } else {
        s.beta_stab_orbit == s.beta_orbit
    })
}

/// Classifies a built graph by its weakly connected components.
///
/// Futile iff exactly one component has two or more vertices and it is either
/// a complete digraph or a complete bipartite digraph. For non-futile graphs
/// the verdict carries the first violating partition-stabilizer generator.
pub fn is_futile_structural(graph: &OrbitalGraph, group: &PermGroup) -> Result<FutilityVerdict> {
    check_built_from(graph, group)?;
    let components = weak_components(graph);
    let mut nontrivial = components.cells().iter().filter(|c| c.len() >= 2);
    let shape = match (nontrivial.next(), nontrivial.next()) {
        (Some(component), None) => classify_component(graph, component),
        _ => None,
    };
    match shape {
        Some((shape, component)) => Ok(FutilityVerdict {
            futile: true,
            shape,
            component: Some(component),
            witness: None,
        }),
        None => Ok(FutilityVerdict {
            futile: false,
            shape: Shape::NotFutile,
            component: None,
            witness: find_witness(graph, group),
        }),
    }
}

// All arcs live inside `component` because every other component is a single
// vertex, and arcs are duplicate-free, so counting settles completeness.
fn classify_component(graph: &OrbitalGraph, component: &[usize]) -> Option<(Shape, Vec<usize>)> {
    let k = component.len();
    let arcs = graph.arc_count();
    if arcs == k * (k - 1) {
        return Some((Shape::CompleteOnOrbit, component.to_vec()));
    }
    let starts = graph.start_vertices();
    let ends = graph.end_vertices();
    let disjoint = starts.iter().all(|v| ends.binary_search(v).is_err());
    if disjoint && starts.len() + ends.len() == k && arcs == starts.len() * ends.len() {
        return Some((Shape::CompleteBipartite { starts, ends }, component.to_vec()));
    }
    None
}

/// First adjacent transposition of the orbit-partition stabilizer (cells in
/// order, transpositions ascending) that maps some arc to a non-arc.
pub fn find_witness(graph: &OrbitalGraph, group: &PermGroup) -> Option<Witness> {
    group
        .orbit_partition()
        .stabilizer_generators()
        .into_iter()
        .find_map(|g| {
            graph.first_violation(&g).map(|(x, y)| Witness {
                image: (g.apply(x), g.apply(y)),
                violated_arc: (x, y),
                permutation: g,
            })
        })
}

/// Futility by definition: every generator of the orbit-partition stabilizer
/// must map arcs onto arcs.
pub fn is_futile_oracle(graph: &OrbitalGraph, group: &PermGroup) -> Result<bool> {
    check_built_from(graph, group)?;
    // A permutation mapping the finite arc set into itself maps it onto
    // itself, so non-arcs also go to non-arcs. Preservation is closed under
    // products and inverses, so checking generators covers the whole group.
    Ok(group
        .orbit_partition()
        .stabilizer_generators()
        .iter()
        .all(|g| graph.is_preserved_by(g)))
}

/// For `beta` outside the orbit of `alpha`: futile iff the stabilizer of
/// `alpha` is transitive on the orbit of `beta`.
pub fn futility_by_stabilizer_transitivity(group: &PermGroup, alpha: usize, beta: usize) -> Result<bool> {
    check_pair(group, alpha, beta)?;
    let alpha_orbit = group.orbit(alpha)?;
    if alpha_orbit.binary_search(&beta).is_ok() {
        return Err(Error::SameOrbit { alpha, beta });
    }
    let stab_orbit = group.point_stabilizer(alpha)?.orbit(beta)?;
    Ok(stab_orbit == group.orbit(beta)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ArcCountBounds {
    pub arc_count: usize,
    /// Largest arc count a non-futile graph of this kind can have.
    pub threshold: usize,
    /// `arc_count > threshold`; sufficient for futility, not necessary.
    pub exceeds: bool,
}

/// Arc-count ceiling for non-futile graphs: `n(n-2)` when both points share an
/// orbit of size `n`, else `min(n(m-1), m(n-1))` for orbit sizes `n` and `m`.
pub fn arc_count_bounds(group: &PermGroup, alpha: usize, beta: usize) -> Result<ArcCountBounds> {
    let s = orbit_sizes(group, alpha, beta)?;
    let n = s.alpha_orbit;
    let m = s.beta_orbit;
    // n >= 2 whenever beta shares alpha's orbit, so n - 2 cannot underflow.
    let threshold = if s.beta_in_alpha_orbit {
        n * (n - 2)
    } else {
        (n * (m - 1)).min(m * (n - 1))
    };
    let arc_count = arc_count_formula(group, alpha, beta)?;
    Ok(ArcCountBounds {
        arc_count,
        threshold,
        exceeds: arc_count > threshold,
    })
}

/// For a transitive group: its orbital graphs are all futile iff it is
/// 2-transitive, and none is otherwise.
pub fn transitive_group_futility(group: &PermGroup) -> Result<bool> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    Ok(group.transitivity_degree() >= 2)
}
