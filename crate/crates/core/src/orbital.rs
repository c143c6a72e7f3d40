//! Orbital graphs: the orbit of a base-pair under a permutation group, viewed
//! as a digraph on the point domain.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::partition::OrderedPartition;
use crate::perm::{check_point, Permutation};

pub type Arc = (usize, usize);

/// Orbital graph of a group with a given base-pair.
///
/// Arcs are sorted lexicographically without duplicates or loops; the
/// adjacency lists are indexed by vertex (index 0 unused) and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitalGraph {
    degree: usize,
    base_pair: Arc,
    arcs: Vec<Arc>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl OrbitalGraph {
    /// Wraps an explicit arc list, checking the structural invariants.
    ///
    /// Arcs may come in any order; duplicates, loops, out-of-range points and a
    /// missing base-pair are rejected.
    pub fn from_arcs(degree: usize, base_pair: Arc, mut arcs: Vec<Arc>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        for &(x, y) in &arcs {
            check_point(x, degree)?;
            check_point(y, degree)?;
            if x == y {
                return Err(Error::InvalidGraph(format!("loop at {x}")));
            }
        }
        arcs.sort_unstable();
        if let Some(w) = arcs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("duplicate arc {:?}", w[0])));
        }
        if arcs.binary_search(&base_pair).is_err() {
            return Err(Error::InvalidGraph(format!("base-pair {base_pair:?} is not an arc")));
        }
        Ok(Self::from_sorted(degree, base_pair, arcs))
    }

    fn from_sorted(degree: usize, base_pair: Arc, arcs: Vec<Arc>) -> Self {
        let mut out_adj = vec![Vec::new(); degree + 1];
        let mut in_adj = vec![Vec::new(); degree + 1];
        for &(x, y) in &arcs {
            out_adj[x].push(y);
            in_adj[y].push(x);
        }
        // out_adj is sorted because arcs are; in_adj needs a pass.
        for list in in_adj.iter_mut() {
            list.sort_unstable();
        }
        OrbitalGraph {
            degree,
            base_pair,
            arcs,
            out_adj,
            in_adj,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base_pair(&self) -> Arc {
        self.base_pair
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, x: usize, y: usize) -> bool {
        self.arcs.binary_search(&(x, y)).is_ok()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    /// Vertices with at least one outgoing arc.
    pub fn start_vertices(&self) -> Vec<usize> {
        (1..=self.degree).filter(|&v| !self.out_adj[v].is_empty()).collect()
    }

    /// Vertices with at least one incoming arc.
    pub fn end_vertices(&self) -> Vec<usize> {
        (1..=self.degree).filter(|&v| !self.in_adj[v].is_empty()).collect()
    }

    /// True if `g` maps every arc to an arc.
    pub fn is_preserved_by(&self, g: &Permutation) -> bool {
        self.first_violation(g).is_none()
    }

    /// First arc (lexicographically) whose image under `g` is not an arc.
    pub fn first_violation(&self, g: &Permutation) -> Option<Arc> {
        self.arcs
            .iter()
            .copied()
            .find(|&(x, y)| !self.has_arc(g.apply(x), g.apply(y)))
    }
}

fn check_pair(degree: usize, alpha: usize, beta: usize) -> Result<()> {
    check_point(alpha, degree)?;
    check_point(beta, degree)?;
    if alpha == beta {
        return Err(Error::EqualBasePoints(alpha));
    }
    Ok(())
}

/// Closure of `{(alpha, beta)}` under the group generators.
pub fn build_orbital_graph(group: &PermGroup, alpha: usize, beta: usize) -> Result<OrbitalGraph> {
    let n = group.degree();
    check_pair(n, alpha, beta)?;
    let mut visited = vec![false; (n + 1) * (n + 1)];
    let mut arcs = vec![(alpha, beta)];
    visited[alpha * (n + 1) + beta] = true;
    let mut queue = VecDeque::from([(alpha, beta)]);
    while let Some((x, y)) = queue.pop_front() {
        for g in group.generators() {
            let image = (g.apply(x), g.apply(y));
            let slot = image.0 * (n + 1) + image.1;
            if !visited[slot] {
                visited[slot] = true;
                arcs.push(image);
                queue.push_back(image);
            }
        }
    }
    arcs.sort_unstable();
    Ok(OrbitalGraph::from_sorted(n, (alpha, beta), arcs))
}

/// `|alpha^H| * |beta^(H_alpha)|`, the arc count, without building the graph.
pub fn arc_count_formula(group: &PermGroup, alpha: usize, beta: usize) -> Result<usize> {
    check_pair(group.degree(), alpha, beta)?;
    let orbit = group.orbit(alpha)?.len();
    let stab_orbit = group.point_stabilizer(alpha)?.orbit(beta)?.len();
    Ok(orbit * stab_orbit)
}

/// True iff the reverse of the base-pair is an arc.
pub fn is_self_paired(graph: &OrbitalGraph) -> bool {
    let (alpha, beta) = graph.base_pair;
    graph.has_arc(beta, alpha)
}

/// Vertices with no incoming and no outgoing arcs.
pub fn isolated_vertices(graph: &OrbitalGraph) -> Vec<usize> {
    (1..=graph.degree)
        .filter(|&v| graph.out_adj[v].is_empty() && graph.in_adj[v].is_empty())
        .collect()
}

/// Weakly connected components, ordered by minimal vertex.
pub fn weak_components(graph: &OrbitalGraph) -> OrderedPartition {
    let n = graph.degree;
    let mut component = vec![usize::MAX; n + 1];
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for start in 1..=n {
        if component[start] != usize::MAX {
            continue;
        }
        let id = cells.len();
        component[start] = id;
        let mut cell = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in graph.out_adj[v].iter().chain(&graph.in_adj[v]) {
                if component[w] == usize::MAX {
                    component[w] = id;
                    cell.push(w);
                    stack.push(w);
                }
            }
        }
        cell.sort_unstable();
        cells.push(cell);
    }
    OrderedPartition::new(n, cells).expect("components partition the vertex set")
}

/// Checks that `graph` is exactly the orbital graph of `group` with its own
/// base-pair: it must be closed under the generators and have the arc count
/// of the base-pair's orbit.
pub fn check_built_from(graph: &OrbitalGraph, group: &PermGroup) -> Result<()> {
    if graph.degree != group.degree() {
        return Err(Error::DegreeMismatch {
            left: graph.degree,
            right: group.degree(),
        });
    }
    let (alpha, beta) = graph.base_pair;
    let mismatch = Error::GraphGroupMismatch { alpha, beta };
    if !group.generators().iter().all(|g| graph.is_preserved_by(g)) {
        return Err(mismatch);
    }
    // Closed and containing the base-pair means it contains the whole orbit;
    // equal size then means it is the orbit.
    if graph.arc_count() != arc_count_formula(group, alpha, beta)? {
        return Err(mismatch);
    }
    Ok(())
}

/// Finds `h` in `group` with `(alpha^h, beta^h) = (gamma, delta)`, if any.
///
/// Uses a chain with base starting `[alpha, beta]`: the first level supplies
/// `u` with `alpha^u = gamma`, the second an element `k` of the stabilizer of
/// `alpha` with `beta^k = delta^(u^-1)`; then `h = k * u`.
pub fn pair_tracing_element(
    group: &PermGroup,
    (alpha, beta): Arc,
    (gamma, delta): Arc,
) -> Result<Option<Permutation>> {
    let n = group.degree();
    check_pair(n, alpha, beta)?;
    check_pair(n, gamma, delta)?;
    let chain = group.chain_with_base(&[alpha, beta])?;
    let Some(u) = chain.transversal_element(0, gamma) else {
        return Ok(None);
    };
    let target = u.inverse().apply(delta);
    let Some(k) = chain.transversal_element(1, target) else {
        return Ok(None);
    };
    Ok(Some(k.then(u)))
}

/// True iff every component with at least two vertices is the image of the
/// base-pair's component under an explicit group element.
pub fn components_pairwise_isomorphic(graph: &OrbitalGraph, group: &PermGroup) -> Result<bool> {
    check_built_from(graph, group)?;
    let components = weak_components(graph);
    let index = components.cell_index();
    let (alpha, beta) = graph.base_pair;
    let base = &components.cells()[index[alpha]];
    for cell in components.cells().iter().filter(|c| c.len() >= 2) {
        let gamma = cell[0];
        let arc = match graph.out_adj[gamma].first() {
            Some(&delta) => (gamma, delta),
            None => (graph.in_adj[gamma][0], gamma),
        };
        let Some(h) = pair_tracing_element(group, (alpha, beta), arc)? else {
            return Ok(false);
        };
        let mut image: Vec<usize> = base.iter().map(|&v| h.apply(v)).collect();
        image.sort_unstable();
        if &image != cell {
            return Ok(false);
        }
        let arcs_map = graph
            .arcs
            .iter()
            .filter(|&&(x, _)| index[x] == index[alpha])
            .all(|&(x, y)| graph.has_arc(h.apply(x), h.apply(y)));
        if !arcs_map {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One base-pair per (orbit representative, stabilizer orbit): for each
/// minimal orbit point `alpha`, the minimal point of every orbit of the
/// stabilizer of `alpha` on the remaining points.
pub fn enumerate_base_pairs(group: &PermGroup) -> Vec<Arc> {
    let mut pairs = Vec::new();
    for orbit in group.orbits() {
        let alpha = orbit[0];
        let stabilizer = group.point_stabilizer(alpha).expect("point in range");
        for stab_orbit in stabilizer.orbits() {
            if stab_orbit[0] != alpha {
                pairs.push((alpha, stab_orbit[0]));
            }
        }
    }
    pairs
}

/// [`enumerate_base_pairs`] with later pairs dropped when their graph equals
/// an earlier one.
pub fn enumerate_distinct_base_pairs(group: &PermGroup) -> Vec<Arc> {
    let mut kept: Vec<OrbitalGraph> = Vec::new();
    for (alpha, beta) in enumerate_base_pairs(group) {
        // Two orbital graphs coincide iff one contains the other's base-pair.
        if kept.iter().any(|g| g.has_arc(alpha, beta)) {
            continue;
        }
        kept.push(build_orbital_graph(group, alpha, beta).expect("valid pair"));
    }
    kept.iter().map(|g| g.base_pair).collect()
}

pub fn graphs_equal(g1: &OrbitalGraph, g2: &OrbitalGraph) -> Result<bool> {
    if g1.degree != g2.degree {
        return Err(Error::DegreeMismatch {
            left: g1.degree,
            right: g2.degree,
        });
    }
    Ok(g1.arcs == g2.arcs)
}
