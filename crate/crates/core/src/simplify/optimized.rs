use fixedbitset::FixedBitSet;

use super::matrix::{compute_path_counts, PathCountMatrix};
use super::merge_detection::merge_detection;
use super::rules::{rule3_local_conditions, RuleApplication};
use super::{Simplified, SimplifyOptions, StepChecker};
use crate::error::{AoeError, Result};
use crate::graph::{AoeGraph, VertexId};

/// Removes every unlabeled edge `(u, v)` with two or more `u -> v` paths.
///
/// `m` must have been computed for `g` as passed in.
pub fn rule2_sweep(g: &mut AoeGraph, m: &PathCountMatrix) -> Vec<RuleApplication> {
    let redundant: Vec<(VertexId, VertexId)> = g
        .unlabeled_edges()
        .filter(|&(u, v)| m.get(u, v) >= 2)
        .collect();
    redundant
        .into_iter()
        .map(|(tail, head)| {
            g.remove_unlabeled(tail, head).expect("edge listed above");
            RuleApplication::Rule2 { tail, head }
        })
        .collect()
}

/// First unlabeled edge, in ascending `(tail, head)` order, that rule 3 can
/// contract.
///
/// Expects `g` to be free of rule-2 edges and `m` to hold its reachability
/// (a matrix from before a rule-2 sweep qualifies). The reachability test
/// checks the out-neighbors of `u` against `I(v)`, the intersection of the
/// reachable sets of all in-neighbors of `v`.
pub fn rule3_scan(g: &AoeGraph, m: &PathCountMatrix) -> Option<(VertexId, VertexId)> {
    let index = m.index();
    let mut common: Vec<Option<FixedBitSet>> = vec![None; index.len()];
    for (u, v) in g.unlabeled_edges() {
        if m.get(u, v) >= 2 || !rule3_local_conditions(g, u, v) {
            continue;
        }
        let j = index.of(v);
        let reach_all = common[j].get_or_insert_with(|| {
            let mut acc: Option<FixedBitSet> = None;
            g.for_each_in_edge(v, |x| {
                let row = m.reach_row(index.of(x));
                match acc.as_mut() {
                    Some(a) => a.intersect_with(row),
                    None => acc = Some(row.clone()),
                }
            });
            acc.expect("v has the in-edge from u")
        });
        let mut ok = true;
        g.for_each_out_edge(u, |y| ok &= reach_all.contains(index.of(y)));
        if ok {
            return Some((u, v));
        }
    }
    None
}

pub fn simplify_optimized(g: &AoeGraph) -> Result<Simplified> {
    simplify_optimized_with(g, SimplifyOptions::default())
}

pub fn simplify_optimized_with(g: &AoeGraph, opts: SimplifyOptions) -> Result<Simplified> {
    if !g.is_acyclic() {
        return Err(AoeError::Cycle);
    }
    let checker = StepChecker::new(g, opts);
    let mut graph = g.clone();
    let mut trace = Vec::new();
    let mut iterations = 0;
    loop {
        iterations += 1;
        let m = compute_path_counts(&graph).expect("rules preserve acyclicity");
        for step in rule2_sweep(&mut graph, &m) {
            checker.check(&graph, &step);
            trace.push(step);
        }
        if let Some(group) = merge_detection(&graph).into_iter().next() {
            let keep = group.members[0];
            for &other in &group.members[1..] {
                let step = RuleApplication::rule1(group.direction, keep, other);
                graph
                    .merge_vertices(keep, other)
                    .expect("rule 1 never joins task endpoints");
                debug_assert!(graph.is_acyclic(), "{step} created a cycle");
                checker.check(&graph, &step);
                trace.push(step);
            }
            continue;
        }
        if let Some((tail, head)) = rule3_scan(&graph, &m) {
            let step = RuleApplication::Rule3 { tail, head };
            graph
                .merge_vertices(tail, head)
                .expect("rule 3 contracts an unlabeled edge");
            debug_assert!(graph.is_acyclic(), "{step} created a cycle");
            checker.check(&graph, &step);
            trace.push(step);
            continue;
        }
        break;
    }
    Ok(Simplified {
        graph,
        trace,
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aon::AonGraph;
    use crate::canonical::{expand_aon, expand_aon_with, DependencyEdges};
    use crate::graph::TaskLabel;
    use crate::simplify::rules::is_saturated;

    fn l(s: &str) -> TaskLabel {
        TaskLabel::new(s).unwrap()
    }

    fn aon(tasks: &[&str], deps: &[(&str, &str)]) -> AonGraph {
        let mut a = AonGraph::new();
        for t in tasks {
            a.add_task(l(t)).unwrap();
        }
        for (x, y) in deps {
            a.add_dep(l(x), l(y)).unwrap();
        }
        a
    }

    #[test]
    fn sweep_removes_closure_bypass() {
        let a = aon(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let mut closed = expand_aon_with(&a, DependencyEdges::Closure).unwrap();
        let m = compute_path_counts(&closed).unwrap();
        let removed = rule2_sweep(&mut closed, &m);
        assert_eq!(
            removed,
            vec![RuleApplication::Rule2 {
                tail: VertexId(2),
                head: VertexId(5)
            }]
        );
        assert_eq!(closed, expand_aon(&a).unwrap());

        let m = compute_path_counts(&closed).unwrap();
        assert!(rule2_sweep(&mut closed, &m).is_empty());
    }

    #[test]
    fn scan_on_single_task() {
        let g = expand_aon(&aon(&["a"], &[])).unwrap();
        let m = compute_path_counts(&g).unwrap();
        assert_eq!(rule3_scan(&g, &m), Some((VertexId(0), VertexId(1))));

        let out = simplify_optimized(&g).unwrap().graph;
        let m = compute_path_counts(&out).unwrap();
        assert_eq!(rule3_scan(&out, &m), None);
        assert!(is_saturated(&out));
    }

    #[test]
    fn empty_project_collapses() {
        let g = expand_aon(&AonGraph::new()).unwrap();
        let out = simplify_optimized(&g).unwrap();
        assert_eq!(out.graph.vertex_count(), 1);
        assert_eq!(out.iterations, 2);
    }
}
