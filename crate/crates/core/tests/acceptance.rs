//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line.
//!
//! Run with `cargo test -p orbitals --test acceptance -- --nocapture` to see
//! the summary lines.

mod common;

use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use orbitals::{
    arc_count_bounds, arc_count_formula, build_orbital_graph, components_pairwise_isomorphic, enumerate_base_pairs,
    individualize, is_futile_fast, is_futile_oracle, is_futile_structural, is_self_paired, isolated_vertices,
    pair_tracing_element, refine_by_graph, transitive_group_futility, weak_components, Arc, OrbitalGraph, PermGroup,
    Permutation,
};

use common::*;

const CORPUS_SIZE: usize = 500;
const FIXTURE_BUDGET: Duration = Duration::from_secs(1);
const AGREEMENT_BUDGET: Duration = Duration::from_secs(60);

fn corpus() -> &'static [PermGroup] {
    static CORPUS: OnceLock<Vec<PermGroup>> = OnceLock::new();
    CORPUS.get_or_init(|| random_corpus(CORPUS_SIZE))
}

fn report(criterion: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("PASS  {criterion}");
    } else {
        println!("FAIL  {criterion}: {} violation(s)", failures.len());
        for f in failures.iter().take(10) {
            println!("      {f}");
        }
    }
    assert!(failures.is_empty(), "{criterion}: {failures:#?}");
}

fn describe(group: &PermGroup) -> String {
    let gens: Vec<String> = group.generators().iter().map(|g| g.to_string()).collect();
    format!("deg {} <{}>", group.degree(), gens.join(", "))
}

fn set(arcs: &[Arc]) -> BTreeSet<Arc> {
    arcs.iter().copied().collect()
}

#[test]
fn criterion_1_worked_examples() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };

    // (a) H = <(2,3),(4,6)> in S7
    let h = example_s7();
    let g17 = build_orbital_graph(&h, 1, 7).unwrap();
    check(g17.arcs() == [(1, 7)], "(a) pair (1,7) arcs");
    check(isolated_vertices(&g17) == vec![2, 3, 4, 5, 6], "(a) pair (1,7) isolated");
    let g13 = build_orbital_graph(&h, 1, 3).unwrap();
    check(g13.arcs() == [(1, 2), (1, 3)], "(a) pair (1,3) arcs");
    let g34 = build_orbital_graph(&h, 3, 4).unwrap();
    check(g34.arcs() == [(2, 4), (2, 6), (3, 4), (3, 6)], "(a) pair (3,4) arcs");

    // (b) two disjoint triangles plus three isolated points
    let h = two_triangles();
    let g = build_orbital_graph(&h, 1, 2).unwrap();
    let components = weak_components(&g);
    let big: Vec<&Vec<usize>> = components.cells().iter().filter(|c| c.len() >= 2).collect();
    check(big == [&vec![1, 2, 3], &vec![4, 5, 6]], "(b) components");
    for cell in &big {
        let inside = g.arcs().iter().filter(|(x, y)| cell.contains(x) && cell.contains(y)).count();
        check(inside == 6, "(b) each component complete with 6 arcs");
    }
    check(g.arc_count() == 12, "(b) no arcs between triangles");
    check(isolated_vertices(&g) == vec![7, 8, 9], "(b) isolated");
    check(!is_futile_fast(&h, 1, 2).unwrap(), "(b) fast says not futile");
    let verdict = is_futile_structural(&g, &h).unwrap();
    check(!verdict.futile, "(b) structural says not futile");
    check(!is_futile_oracle(&g, &h).unwrap(), "(b) oracle says not futile");
    match &verdict.witness {
        Some(w) => {
            let p = &w.permutation;
            let (x, y) = w.violated_arc;
            let in_gp = h
                .orbit_partition()
                .cells()
                .iter()
                .all(|c| c.iter().all(|&v| c.contains(&p.apply(v))));
            check(in_gp, "(b) witness stabilizes the orbit partition");
            check(g.has_arc(x, y) && !g.has_arc(p.apply(x), p.apply(y)), "(b) witness breaks an arc");
        }
        None => check(false, "(b) witness present"),
    }
    let t24 = Permutation::parse("(2,4)", 9).unwrap();
    check(g.has_arc(1, 2) && !g.has_arc(t24.apply(1), t24.apply(2)), "(b) (2,4) maps (1,2) to non-arc (1,4)");

    // (c) bounds met with equality
    let h = dihedral_square();
    let g = build_orbital_graph(&h, 1, 2).unwrap();
    let expected: BTreeSet<Arc> = set(&[(1, 2), (2, 1), (1, 3), (3, 1), (2, 4), (4, 2), (3, 4), (4, 3)]);
    check(set(g.arcs()) == expected && g.arc_count() == 8, "(c) eight arcs");
    let b = arc_count_bounds(&h, 1, 2).unwrap();
    check(b.threshold == 4 * (4 - 2) && b.arc_count == b.threshold, "(c) n(n-2) bound met");

    let h = s3_on_two_triangles();
    let g = build_orbital_graph(&h, 1, 4).unwrap();
    let expected = set(&[(1, 4), (1, 6), (2, 4), (2, 5), (3, 5), (3, 6)]);
    check(set(g.arcs()) == expected, "(c) six arcs");
    let b = arc_count_bounds(&h, 1, 4).unwrap();
    check(b.threshold == 3 * (3 - 1) && b.arc_count == b.threshold, "(c) n(m-1) bound met");

    let elapsed = start.elapsed();
    check(elapsed < FIXTURE_BUDGET, &format!("fixtures took {elapsed:?}"));
    report("1 worked examples", &failures);
}

#[test]
fn criterion_2_three_way_agreement() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for group in corpus() {
        for (a, b) in all_pairs(group.degree()) {
            let graph = build_orbital_graph(group, a, b).unwrap();
            let fast = is_futile_fast(group, a, b).unwrap();
            let structural = is_futile_structural(&graph, group).unwrap().futile;
            let oracle = is_futile_oracle(&graph, group).unwrap();
            checked += 1;
            if fast != structural || structural != oracle {
                failures.push(format!(
                    "{} pair ({a},{b}): fast={fast} structural={structural} oracle={oracle}",
                    describe(group)
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > AGREEMENT_BUDGET {
        failures.push(format!("took {elapsed:?}"));
    }
    println!("      {} groups, {checked} base-pairs, {elapsed:?}", corpus().len());
    report("2 three-way futility agreement", &failures);
}

#[test]
fn criterion_3_arc_count_identity() {
    let mut failures = Vec::new();
    for group in corpus() {
        for (a, b) in all_pairs(group.degree()) {
            let built = build_orbital_graph(group, a, b).unwrap().arc_count();
            let orbit = group.orbit(a).unwrap().len();
            let stab_orbit = group.point_stabilizer(a).unwrap().orbit(b).unwrap().len();
            let formula = arc_count_formula(group, a, b).unwrap();
            if built != orbit * stab_orbit || built != formula {
                failures.push(format!("{} pair ({a},{b}): {built} arcs vs {orbit}*{stab_orbit}", describe(group)));
            }
        }
    }
    report("3 arc-count identity", &failures);
}

#[test]
fn criterion_4_transitive_dichotomy() {
    let mut failures = Vec::new();
    let (mut transitive, mut two_transitive) = (0, 0);
    for group in corpus().iter().filter(|g| g.is_transitive()) {
        transitive += 1;
        let predicted = transitive_group_futility(group).unwrap();
        if predicted {
            two_transitive += 1;
        }
        let verdicts: BTreeSet<bool> = all_pairs(group.degree())
            .map(|(a, b)| is_futile_oracle(&build_orbital_graph(group, a, b).unwrap(), group).unwrap())
            .collect();
        if verdicts != BTreeSet::from([predicted]) {
            failures.push(format!("{}: predicted {predicted}, oracle {verdicts:?}", describe(group)));
        }
    }
    println!("      {transitive} transitive groups, {two_transitive} of them 2-transitive");
    if transitive == 0 || two_transitive == 0 || two_transitive == transitive {
        failures.push("corpus does not exercise both sides of the dichotomy".into());
    }
    report("4 transitive dichotomy", &failures);
}

#[test]
fn criterion_5_enumeration_completeness() {
    let mut failures = Vec::new();
    for group in corpus().iter().filter(|g| g.degree() <= 7) {
        let arc_set = |(a, b): Arc| build_orbital_graph(group, a, b).unwrap().arcs().to_vec();
        let every: BTreeSet<Vec<Arc>> = all_pairs(group.degree()).map(arc_set).collect();
        let enumerated: BTreeSet<Vec<Arc>> = enumerate_base_pairs(group).into_iter().map(arc_set).collect();
        if every != enumerated {
            failures.push(format!(
                "{}: {} graphs overall, {} from enumeration",
                describe(group),
                every.len(),
                enumerated.len()
            ));
        }
    }
    report("5 enumeration completeness", &failures);
}

fn structural_violations(group: &PermGroup, graph: &OrbitalGraph) -> Vec<&'static str> {
    let mut bad = Vec::new();
    let (alpha, beta) = graph.base_pair();
    let n = group.degree();
    let alpha_orbit = group.orbit(alpha).unwrap();
    let beta_orbit = group.orbit(beta).unwrap();

    // every arc regenerates the same graph
    if graph
        .arcs()
        .iter()
        .any(|&(x, y)| build_orbital_graph(group, x, y).unwrap().arcs() != graph.arcs())
    {
        bad.push("base-pair regeneration");
    }
    // self-paired iff some element swaps alpha and beta
    let swapper = pair_tracing_element(group, (alpha, beta), (beta, alpha)).unwrap();
    if is_self_paired(graph) != swapper.is_some() {
        bad.push("self-paired iff swap");
    }
    let reversed: BTreeSet<Arc> = graph.arcs().iter().map(|&(x, y)| (y, x)).collect();
    if is_self_paired(graph) != (reversed == set(graph.arcs())) {
        bad.push("self-paired iff reverse-closed");
    }
    // start and end vertices are the two orbits
    if graph.start_vertices() != alpha_orbit || graph.end_vertices() != beta_orbit {
        bad.push("start/end vertices");
    }
    // out-degree of alpha, in-degree of beta
    let out_alpha = group.point_stabilizer(alpha).unwrap().orbit(beta).unwrap().len();
    let in_beta = group.point_stabilizer(beta).unwrap().orbit(alpha).unwrap().len();
    if graph.out_neighbors(alpha).len() != out_alpha || graph.in_neighbors(beta).len() != in_beta {
        bad.push("stabilizer-orbit degrees");
    }
    // no isolated vertices iff the two orbits cover the domain
    let union: BTreeSet<usize> = alpha_orbit.iter().chain(&beta_orbit).copied().collect();
    let isolated = isolated_vertices(graph);
    if isolated.is_empty() != (union.len() == n) {
        bad.push("isolated criterion");
    }
    if isolated != (1..=n).filter(|p| !union.contains(p)).collect::<Vec<_>>() {
        bad.push("isolated set");
    }
    // transitive: nothing isolated; two orbits covering everything: bipartite
    if group.is_transitive() && !isolated.is_empty() {
        bad.push("transitive group left an isolated vertex");
    }
    if !group.is_transitive() && union.len() == n && alpha_orbit != beta_orbit {
        let crossing = graph
            .arcs()
            .iter()
            .all(|(x, y)| alpha_orbit.contains(x) && beta_orbit.contains(y));
        if !crossing || !isolated.is_empty() {
            bad.push("two-orbit graph not bipartite or has isolated vertices");
        }
    }
    // generators and a longer word act as automorphisms
    let word = group
        .generators()
        .iter()
        .chain(group.generators().iter().rev())
        .fold(Permutation::identity(n), |acc, g| acc.compose(g).unwrap());
    if !group.generators().iter().chain([&word]).all(|g| graph.is_preserved_by(g)) {
        bad.push("group acts by automorphisms");
    }
    // nontrivial components are images of the base component
    if !components_pairwise_isomorphic(graph, group).unwrap() {
        bad.push("component isomorphism");
    }
    // same graph from (alpha, gamma) iff gamma in beta^(H_alpha)
    let stab_orbit = group.point_stabilizer(alpha).unwrap().orbit(beta).unwrap();
    for gamma in (1..=n).filter(|&g| g != alpha) {
        let same = build_orbital_graph(group, alpha, gamma).unwrap().arcs() == graph.arcs();
        if same != stab_orbit.contains(&gamma) {
            bad.push("second-point classification");
            break;
        }
    }
    bad
}

#[test]
fn criterion_6_structural_properties() {
    let mut failures = Vec::new();
    let mut graphs = 0;
    for group in corpus() {
        for (a, b) in enumerate_base_pairs(group) {
            let graph = build_orbital_graph(group, a, b).unwrap();
            graphs += 1;
            for broken in structural_violations(group, &graph) {
                failures.push(format!("{} pair ({a},{b}): {broken}", describe(group)));
            }
        }
    }
    println!("      {graphs} graphs checked");
    report("6 structural properties", &failures);
}

#[test]
fn criterion_7_futile_graphs_never_refine() {
    let mut failures = Vec::new();
    let (mut futile, mut useful_splits, mut orbit_splits) = (0, 0, 0);
    for group in corpus() {
        let orbits = group.orbit_partition();
        for (a, b) in enumerate_base_pairs(group) {
            let graph = build_orbital_graph(group, a, b).unwrap();
            let is_futile = is_futile_oracle(&graph, group).unwrap();
            let on_orbits = refine_by_graph(&orbits, &graph).unwrap();
            if on_orbits.split_count > 0 {
                orbit_splits += 1;
            }
            // the search-node partition: alpha individualized
            let node = individualize(&orbits, a).unwrap();
            let on_node = refine_by_graph(&node, &graph).unwrap();
            if is_futile {
                futile += 1;
                if on_orbits.split_count != 0 || on_node.split_count != 0 {
                    failures.push(format!("{} futile pair ({a},{b}) refined", describe(group)));
                }
            } else if on_node.split_count >= 1 {
                useful_splits += 1;
            }
        }
    }
    println!(
        "      {futile} futile graphs without splits; {useful_splits} non-futile graphs split the \
         individualized orbit partition; {orbit_splits} graphs split the bare orbit partition"
    );
    if useful_splits == 0 {
        failures.push("no non-futile graph refined anything".into());
    }
    report("7 futile graphs never refine", &failures);
}
