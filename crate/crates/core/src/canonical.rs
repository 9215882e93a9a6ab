//! Naive expansion of dependency descriptions into canonical AOE graphs.
//!
//! Vertex numbering of an expansion over tasks `T0..Tn-1` (in the AoN task
//! order): `0` is the project start, `2i+1` and `2i+2` are the start and end
//! milestones of `Ti`, and `2n+1` is the project end.

use crate::aon::AonGraph;
use crate::error::Result;
use crate::graph::{AoeGraph, TaskReachability, VertexId};

/// Which dependency pairs become unlabeled edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DependencyEdges {
    /// Only covering pairs of the dependency order.
    Reduction,
    /// Every pair of the transitive closure.
    Closure,
}

/// Expands `aon` using the transitive reduction of its dependencies.
pub fn expand_aon(aon: &AonGraph) -> Result<AoeGraph> {
    expand_aon_with(aon, DependencyEdges::Reduction)
}

pub fn expand_aon_with(aon: &AonGraph, edges: DependencyEdges) -> Result<AoeGraph> {
    let closure = aon.reachability()?;
    let deps = match edges {
        DependencyEdges::Reduction => closure.transitive_reduction(),
        DependencyEdges::Closure => closure,
    };
    Ok(expand_relation(aon, &deps))
}

fn expand_relation(aon: &AonGraph, deps: &TaskReachability) -> AoeGraph {
    let n = aon.task_count() as u32;
    let source = VertexId(0);
    let sink = VertexId(2 * n + 1);
    let start = |i: usize| VertexId(2 * i as u32 + 1);
    let end = |i: usize| VertexId(2 * i as u32 + 2);

    let mut g = AoeGraph::new();
    for v in 0..=2 * n + 1 {
        g.add_vertex(VertexId(v));
    }
    if n == 0 {
        g.add_unlabeled(source, sink).expect("distinct vertices");
        return g;
    }
    for (i, t) in aon.tasks().iter().enumerate() {
        g.add_task(t.clone(), start(i), end(i))
            .expect("fresh vertices");
    }
    // `deps` is indexed by sorted label; translate to AoN positions.
    let position: Vec<usize> = deps
        .labels()
        .iter()
        .map(|t| aon.position(t).expect("relation built from the same tasks"))
        .collect();
    for i in 0..deps.len() {
        for j in deps.successors(i) {
            g.add_unlabeled(end(position[i]), start(position[j]))
                .expect("distinct vertices");
        }
    }
    for i in 0..aon.task_count() {
        if g.in_degree(start(i)).expect("live") == 0 {
            g.add_unlabeled(source, start(i))
                .expect("distinct vertices");
        }
        if g.out_degree(end(i)).expect("live") == 0 {
            g.add_unlabeled(end(i), sink).expect("distinct vertices");
        }
    }
    g
}

/// Rebuilds `g` as the canonical expansion of its own task reachability.
///
/// Only task labels and the reachability relation survive; vertex ids are
/// reassigned.
pub fn canonicalize_aoe(g: &AoeGraph) -> Result<AoeGraph> {
    let rel = g.task_reachability()?;
    expand_aon(&AonGraph::from_relation(&rel))
}
