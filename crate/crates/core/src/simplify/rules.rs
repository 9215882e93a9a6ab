//! The three local rewrite rules, checked directly against the graph.
//!
//! Rule 1 merges two vertices that have no outgoing task and identical
//! out-neighbors (forward), or no incoming task and identical in-neighbors
//! (backward). Rule 2 deletes an unlabeled edge whose endpoints are joined by
//! another path. Rule 3 contracts an unlabeled edge `(u, v)` when:
//!
//! * rule 2 does not apply to it,
//! * `u` has no outgoing task, or `(u, v)` is the only edge into `v`,
//! * `v` has no incoming task, or `(u, v)` is the only edge out of `u`,
//! * every in-neighbor `x` of `v` reaches every out-neighbor `y` of `u`,
//!   where the pair `(u, v)` is witnessed by the edge itself.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{AoeError, Result};
use crate::graph::{AoeGraph, Edge, EdgeKind, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule1Direction {
    /// Same outgoing neighbors, no outgoing tasks.
    Forward,
    /// Same incoming neighbors, no incoming tasks.
    Backward,
}

/// One rewrite step, recorded in traces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum RuleApplication {
    Rule1Forward { u: VertexId, v: VertexId },
    Rule1Backward { u: VertexId, v: VertexId },
    Rule2 { tail: VertexId, head: VertexId },
    Rule3 { tail: VertexId, head: VertexId },
}

impl RuleApplication {
    pub fn rule1(direction: Rule1Direction, u: VertexId, v: VertexId) -> Self {
        match direction {
            Rule1Direction::Forward => RuleApplication::Rule1Forward { u, v },
            Rule1Direction::Backward => RuleApplication::Rule1Backward { u, v },
        }
    }

    /// Whether applying this step removes a vertex.
    pub fn is_merge(&self) -> bool {
        !matches!(self, RuleApplication::Rule2 { .. })
    }
}

impl fmt::Display for RuleApplication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleApplication::Rule1Forward { u, v } => {
                write!(f, "rule 1 (forward) merging {u} and {v}")
            }
            RuleApplication::Rule1Backward { u, v } => {
                write!(f, "rule 1 (backward) merging {u} and {v}")
            }
            RuleApplication::Rule2 { tail, head } => write!(f, "rule 2 removing {tail} -> {head}"),
            RuleApplication::Rule3 { tail, head } => {
                write!(f, "rule 3 contracting {tail} -> {head}")
            }
        }
    }
}

fn distinct(g: &AoeGraph, u: VertexId, v: VertexId) -> Result<()> {
    for w in [u, v] {
        if !g.contains_vertex(w) {
            return Err(AoeError::UnknownVertex(w));
        }
    }
    if u == v {
        return Err(AoeError::SameVertex(u));
    }
    Ok(())
}

pub fn rule1_forward(g: &AoeGraph, u: VertexId, v: VertexId) -> Result<bool> {
    distinct(g, u, v)?;
    Ok(g.out_tasks(u)?.is_empty()
        && g.out_tasks(v)?.is_empty()
        && g.out_unlabeled(u)? == g.out_unlabeled(v)?)
}

pub fn rule1_backward(g: &AoeGraph, u: VertexId, v: VertexId) -> Result<bool> {
    distinct(g, u, v)?;
    Ok(g.in_tasks(u)?.is_empty()
        && g.in_tasks(v)?.is_empty()
        && g.in_unlabeled(u)? == g.in_unlabeled(v)?)
}

/// Forward is reported when both directions hold.
pub fn rule1_applicable(g: &AoeGraph, u: VertexId, v: VertexId) -> Result<Option<Rule1Direction>> {
    if rule1_forward(g, u, v)? {
        Ok(Some(Rule1Direction::Forward))
    } else if rule1_backward(g, u, v)? {
        Ok(Some(Rule1Direction::Backward))
    } else {
        Ok(None)
    }
}

fn require_unlabeled(g: &AoeGraph, e: &Edge) -> Result<(VertexId, VertexId)> {
    if let EdgeKind::Task(t) = &e.kind {
        return Err(AoeError::NotUnlabeled(e.tail, e.head, t.clone()));
    }
    if !g.has_unlabeled(e.tail, e.head) {
        return Err(AoeError::UnknownEdge(e.tail, e.head));
    }
    Ok((e.tail, e.head))
}

pub fn rule2_applicable(g: &AoeGraph, e: &Edge) -> Result<bool> {
    let (u, v) = require_unlabeled(g, e)?;
    Ok(has_bypass(g, u, v))
}

/// A `u -> v` path other than the unlabeled edge `(u, v)` itself.
fn has_bypass(g: &AoeGraph, u: VertexId, v: VertexId) -> bool {
    if g.multiplicity(u, v) > 1 {
        return true;
    }
    let mut seen = BTreeSet::new();
    let mut stack: Vec<VertexId> = g
        .out_neighbors(u)
        .expect("live vertex")
        .into_iter()
        .filter(|&w| w != v)
        .collect();
    while let Some(w) = stack.pop() {
        if !seen.insert(w) {
            continue;
        }
        let mut hit = false;
        g.for_each_out_edge(w, |x| {
            if x == v {
                hit = true;
            } else if !seen.contains(&x) {
                stack.push(x);
            }
        });
        if hit {
            return true;
        }
    }
    false
}

fn reachable_from(g: &AoeGraph, x: VertexId) -> BTreeSet<VertexId> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![x];
    while let Some(w) = stack.pop() {
        g.for_each_out_edge(w, |y| {
            if seen.insert(y) {
                stack.push(y);
            }
        });
    }
    seen
}

pub fn rule3_applicable(g: &AoeGraph, e: &Edge) -> Result<bool> {
    let (u, v) = require_unlabeled(g, e)?;
    Ok(rule3_holds(g, u, v))
}

fn rule3_holds(g: &AoeGraph, u: VertexId, v: VertexId) -> bool {
    if !rule3_local_conditions(g, u, v) || has_bypass(g, u, v) {
        return false;
    }
    let targets: Vec<VertexId> = g
        .out_neighbors(u)
        .expect("live vertex")
        .into_iter()
        .filter(|&y| y != v)
        .collect();
    if targets.is_empty() {
        return true;
    }
    g.in_neighbors(v)
        .expect("live vertex")
        .into_iter()
        .filter(|&x| x != u)
        .all(|x| {
            let reach = reachable_from(g, x);
            targets.iter().all(|y| reach.contains(y))
        })
}

/// The two degree conditions of rule 3 on the unlabeled edge `(u, v)`.
pub(crate) fn rule3_local_conditions(g: &AoeGraph, u: VertexId, v: VertexId) -> bool {
    let tasks_out = !g.out_tasks(u).expect("live vertex").is_empty();
    let tasks_in = !g.in_tasks(v).expect("live vertex").is_empty();
    (!tasks_out || g.in_degree(v).expect("live vertex") == 1)
        && (!tasks_in || g.out_degree(u).expect("live vertex") == 1)
}

/// Whether `r` can be applied to `g` as it stands.
pub fn is_applicable(g: &AoeGraph, r: &RuleApplication) -> Result<bool> {
    match *r {
        RuleApplication::Rule1Forward { u, v } => rule1_forward(g, u, v),
        RuleApplication::Rule1Backward { u, v } => rule1_backward(g, u, v),
        RuleApplication::Rule2 { tail, head } => rule2_applicable(g, &Edge::unlabeled(tail, head)),
        RuleApplication::Rule3 { tail, head } => rule3_applicable(g, &Edge::unlabeled(tail, head)),
    }
}

/// Applies `r` in place. The graph is left untouched on error.
pub fn apply_rule(g: &mut AoeGraph, r: &RuleApplication) -> Result<()> {
    if !is_applicable(g, r).unwrap_or(false) {
        return Err(AoeError::RuleNotApplicable(*r));
    }
    apply_unchecked(g, r);
    Ok(())
}

/// Applies a rule already known to hold.
pub(crate) fn apply_unchecked(g: &mut AoeGraph, r: &RuleApplication) {
    match *r {
        RuleApplication::Rule1Forward { u, v }
        | RuleApplication::Rule1Backward { u, v }
        | RuleApplication::Rule3 { tail: u, head: v } => {
            g.merge_vertices(u, v)
                .expect("rule preconditions exclude task edges between u and v");
            debug_assert!(g.is_acyclic(), "{r} created a cycle");
        }
        RuleApplication::Rule2 { tail, head } => g
            .remove_unlabeled(tail, head)
            .expect("edge checked by rule predicate"),
    }
}

/// Every rule application available on `g`, in a fixed order: rule 1 pairs
/// ascending, then unlabeled edges ascending with rule 2 before rule 3.
pub fn applicable_rules(g: &AoeGraph) -> Vec<RuleApplication> {
    let mut found = Vec::new();
    let vertices: Vec<VertexId> = g.vertices().collect();
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            for dir in [Rule1Direction::Forward, Rule1Direction::Backward] {
                let holds = match dir {
                    Rule1Direction::Forward => rule1_forward(g, u, v),
                    Rule1Direction::Backward => rule1_backward(g, u, v),
                };
                if holds.expect("live vertices") {
                    found.push(RuleApplication::rule1(dir, u, v));
                }
            }
        }
    }
    for (u, v) in g.unlabeled_edges() {
        if has_bypass(g, u, v) {
            found.push(RuleApplication::Rule2 { tail: u, head: v });
        } else if rule3_holds(g, u, v) {
            found.push(RuleApplication::Rule3 { tail: u, head: v });
        }
    }
    found
}

/// The first entry [`applicable_rules`] would return, found without
/// building the whole list.
pub fn first_applicable(g: &AoeGraph) -> Option<RuleApplication> {
    let vertices: Vec<VertexId> = g.vertices().collect();
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if let Some(dir) = rule1_applicable(g, u, v).expect("live vertices") {
                return Some(RuleApplication::rule1(dir, u, v));
            }
        }
    }
    g.unlabeled_edges().find_map(|(u, v)| {
        if has_bypass(g, u, v) {
            Some(RuleApplication::Rule2 { tail: u, head: v })
        } else if rule3_holds(g, u, v) {
            Some(RuleApplication::Rule3 { tail: u, head: v })
        } else {
            None
        }
    })
}

/// No rule applies.
pub fn is_saturated(g: &AoeGraph) -> bool {
    first_applicable(g).is_none()
}
