mod common;

use std::collections::BTreeSet;

use aoe_simplify::oracle::random_poset;
use aoe_simplify::simplify::{
    applicable_rules, apply_rule, compute_path_counts, merge_detection, rule1_backward,
    rule1_forward, rule2_applicable, rule3_applicable, rule3_scan, Rule1Direction,
};
use aoe_simplify::Edge;
use aoe_simplify::{AoeGraph, VertexId};
use common::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check(g: &AoeGraph) {
    assert_eq!(matrix_mismatch(g), None, "{g:?}");
}

#[test]
fn matrix_matches_enumeration_on_all_small_dags() {
    for k in 0..=5 {
        all_simple_dags(k).for_each(|g| check(&g));
    }
}

#[test]
fn matrix_matches_enumeration_with_parallel_edges() {
    for k in 0..=5 {
        all_multi_dags(k).for_each(|g| check(&g));
    }
}

#[test]
fn matrix_matches_enumeration_on_random_dags() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..2000 {
        check(&random_dag(&mut rng));
    }
}

fn components(
    g: &AoeGraph,
    related: impl Fn(VertexId, VertexId) -> bool,
) -> BTreeSet<Vec<VertexId>> {
    let vs: Vec<VertexId> = g.vertices().collect();
    let mut seen = BTreeSet::new();
    let mut out = BTreeSet::new();
    for &a in &vs {
        if seen.contains(&a) {
            continue;
        }
        let class: Vec<VertexId> = vs
            .iter()
            .copied()
            .filter(|&b| b == a || related(a, b))
            .collect();
        seen.extend(class.iter().copied());
        if class.len() > 1 {
            out.insert(class);
        }
    }
    out
}

fn check_groups(g: &AoeGraph) {
    let groups = merge_detection(g);
    for dir in [Rule1Direction::Forward, Rule1Direction::Backward] {
        let found: BTreeSet<Vec<VertexId>> = groups
            .iter()
            .filter(|gr| gr.direction == dir)
            .map(|gr| gr.members.clone())
            .collect();
        let expected = match dir {
            Rule1Direction::Forward => components(g, |a, b| rule1_forward(g, a, b).unwrap()),
            Rule1Direction::Backward => components(g, |a, b| rule1_backward(g, a, b).unwrap()),
        };
        assert_eq!(found, expected, "{dir:?} groups of {g:?}");
    }
}

/// On graphs without rule-2 edges the scan finds exactly the first
/// contractible edge.
fn check_scan(g: &AoeGraph) {
    let edges: Vec<Edge> = g
        .unlabeled_edges()
        .map(|(a, b)| Edge::unlabeled(a, b))
        .collect();
    if edges.iter().any(|e| rule2_applicable(g, e).unwrap()) {
        return;
    }
    let m = compute_path_counts(g).unwrap();
    let first = edges
        .iter()
        .find(|e| rule3_applicable(g, e).unwrap())
        .map(|e| (e.tail, e.head));
    assert_eq!(rule3_scan(g, &m), first, "{g:?}");
}

#[test]
fn merge_detection_agrees_with_pairwise_rule1() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for seed in 0..300 {
        let n = rng.gen_range(0..=9);
        let density = rng.gen_range(0.0..0.7);
        let mut g = random_poset(n, density, seed).expand();
        loop {
            check_groups(&g);
            check_scan(&g);
            let rules = applicable_rules(&g);
            let Some(step) = rules.choose(&mut rng) else {
                break;
            };
            apply_rule(&mut g, step).unwrap();
        }
    }
}
