//! Independent checks: output identity by vertex signatures, a brute-force
//! vertex minimum, poset generators and a random-order confluence harness.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::aon::AonGraph;
use crate::canonical::expand_aon;
use crate::error::{AoeError, Result};
use crate::graph::{AoeGraph, TaskLabel, TaskReachability, VertexId};
use crate::simplify::{
    is_saturated, simplify_naive_with, simplify_optimized_with, simplify_randomized,
    RuleApplication, SimplifyOptions,
};

/// Largest task count [`brute_force_min`] accepts.
pub const BRUTE_FORCE_TASK_LIMIT: usize = 4;

/// Tasks ending and starting at a vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSignature {
    pub in_tasks: Vec<TaskLabel>,
    pub out_tasks: Vec<TaskLabel>,
}

impl VertexSignature {
    pub fn is_empty(&self) -> bool {
        self.in_tasks.is_empty() && self.out_tasks.is_empty()
    }
}

pub fn signature(g: &AoeGraph, v: VertexId) -> Result<VertexSignature> {
    Ok(VertexSignature {
        in_tasks: g.in_tasks(v)?.iter().cloned().collect(),
        out_tasks: g.out_tasks(v)?.iter().cloned().collect(),
    })
}

pub fn signatures(g: &AoeGraph) -> BTreeMap<VertexId, VertexSignature> {
    g.vertices()
        .map(|v| (v, signature(g, v).expect("live vertex")))
        .collect()
}

/// Vertex lookup by signature, or `None` if two vertices share one.
fn signature_map(g: &AoeGraph) -> Option<BTreeMap<VertexSignature, VertexId>> {
    let mut map = BTreeMap::new();
    for (v, sig) in signatures(g) {
        if map.insert(sig, v).is_some() {
            return None;
        }
    }
    Some(map)
}

/// Whether two saturated graphs are the same up to renaming vertices by
/// their signatures.
pub fn same_output(g: &AoeGraph, h: &AoeGraph) -> Result<bool> {
    if !is_saturated(g) || !is_saturated(h) {
        return Err(AoeError::NotSaturated);
    }
    if !g.task_labels().eq(h.task_labels()) {
        return Ok(false);
    }
    let (Some(gs), Some(hs)) = (signature_map(g), signature_map(h)) else {
        return Ok(false);
    };
    if !gs.keys().eq(hs.keys()) {
        return Ok(false);
    }
    let to_h: BTreeMap<VertexId, VertexId> = gs.iter().map(|(sig, &v)| (v, hs[sig])).collect();
    for (t, a, b) in g.task_edges() {
        if h.st(t)? != to_h[&a] || h.end(t)? != to_h[&b] {
            return Ok(false);
        }
    }
    let mapped: BTreeSet<(VertexId, VertexId)> = g
        .unlabeled_edges()
        .map(|(a, b)| (to_h[&a], to_h[&b]))
        .collect();
    Ok(mapped.iter().copied().eq(h.unlabeled_edges()))
}

/// Fewest vertices of any AOE whose task reachability is exactly `r`.
///
/// Searches every partition of the task endpoints into vertices (a task's
/// two endpoints kept apart), joins each required pair `(T, T')` by an edge
/// `End(T) -> St(T')`, and keeps the acyclic graphs that realize `r`. Adding
/// every required edge gives the most reachability any graph with that
/// endpoint partition can have without exceeding `r`, so nothing is missed.
/// A graph has at least one vertex, so the empty relation yields 1.
pub fn brute_force_min(r: &TaskReachability) -> Result<usize> {
    if r.len() > BRUTE_FORCE_TASK_LIMIT {
        return Err(AoeError::TooLarge {
            count: r.len(),
            limit: BRUTE_FORCE_TASK_LIMIT,
        });
    }
    if !r.is_strict_partial_order() {
        return Err(AoeError::NotPartialOrder);
    }
    if r.is_empty() {
        return Ok(1);
    }
    let mut search = EndpointSearch {
        r,
        assign: vec![0; 2 * r.len()],
        best: 2 * r.len() + 1,
    };
    search.extend(0, 0);
    Ok(search.best)
}

struct EndpointSearch<'a> {
    r: &'a TaskReachability,
    /// `assign[2i]` is the start vertex of task `i`, `assign[2i + 1]` its end.
    assign: Vec<usize>,
    best: usize,
}

impl EndpointSearch<'_> {
    /// Restricted growth enumeration: each position takes an existing block
    /// or opens the next one.
    fn extend(&mut self, pos: usize, blocks: usize) {
        if blocks >= self.best {
            return;
        }
        if pos == self.assign.len() {
            if self.realizes(blocks) {
                self.best = blocks;
            }
            return;
        }
        for b in 0..=blocks {
            if pos % 2 == 1 && self.assign[pos - 1] == b {
                continue;
            }
            self.assign[pos] = b;
            self.extend(pos + 1, blocks.max(b + 1));
        }
    }

    fn realizes(&self, blocks: usize) -> bool {
        let mut g = AoeGraph::new();
        for v in 0..blocks {
            g.add_vertex(VertexId(v as u32));
        }
        let at = |p: usize| VertexId(self.assign[p] as u32);
        for (i, t) in self.r.labels().iter().enumerate() {
            g.add_task(t.clone(), at(2 * i), at(2 * i + 1))
                .expect("endpoints kept apart");
        }
        for i in 0..self.r.len() {
            for j in self.r.successors(i) {
                let (end, start) = (at(2 * i + 1), at(2 * j));
                if end != start {
                    g.add_unlabeled(end, start).expect("distinct endpoints");
                }
            }
        }
        matches!(g.task_reachability(), Ok(rel) if rel == *self.r)
    }
}

/// A strict partial order over generated task labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetSpec {
    pub relation: TaskReachability,
}

impl PosetSpec {
    pub fn n_tasks(&self) -> usize {
        self.relation.len()
    }

    pub fn labels(&self) -> &[TaskLabel] {
        self.relation.labels()
    }

    /// AoN graph over the labels in sorted order with every related pair as a
    /// dependency.
    pub fn to_aon(&self) -> AonGraph {
        AonGraph::from_relation(&self.relation)
    }

    pub fn expand(&self) -> AoeGraph {
        expand_aon(&self.to_aon()).expect("partial orders are acyclic")
    }
}

/// `n` zero-padded labels `t0`, `t1`, ... that sort in numeric order.
pub fn task_labels(n: usize) -> Vec<TaskLabel> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n)
        .map(|i| TaskLabel::new(format!("t{i:0width$}")).expect("nonempty"))
        .collect()
}

/// Samples each pair `i < j` of a random permutation with probability
/// `density`, then closes transitively. Deterministic per seed.
pub fn random_poset(n: usize, density: f64, seed: u64) -> PosetSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_poset_with(n, density, &mut rng)
}

pub fn random_poset_with<R: Rng>(n: usize, density: f64, rng: &mut R) -> PosetSpec {
    let density = density.clamp(0.0, 1.0);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut rel = TaskReachability::empty(task_labels(n));
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                rel.insert_index(perm[i], perm[j]);
            }
        }
    }
    PosetSpec {
        relation: rel.transitive_closure(),
    }
}

/// Every strict partial order on `n` labeled tasks.
pub fn all_posets(n: usize) -> Vec<PosetSpec> {
    assert!(
        n <= 5,
        "exhaustive poset enumeration is limited to five tasks"
    );
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let labels = task_labels(n);
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut rel = TaskReachability::empty(labels.clone());
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                rel.insert_index(i, j);
            }
        }
        if rel.is_strict_partial_order() {
            out.push(PosetSpec { relation: rel });
        }
    }
    out
}

/// Two runs that ended in different graphs.
#[derive(Clone, Debug)]
pub struct Divergence {
    pub first: Vec<RuleApplication>,
    pub second: Vec<RuleApplication>,
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    pub runs: usize,
    pub divergence: Option<Divergence>,
}

impl ConfluenceReport {
    pub fn passed(&self) -> bool {
        self.divergence.is_none()
    }
}

/// Simplifies the expansion of `p` with the deterministic naive driver, the
/// optimized driver and `orders` uniformly random rule orders, then compares
/// every pair of outputs.
pub fn confluence_trial(p: &PosetSpec, orders: usize, seed: u64) -> Result<ConfluenceReport> {
    let g = p.expand();
    let opts = SimplifyOptions::default();
    let mut runs = vec![
        simplify_optimized_with(&g, opts)?,
        simplify_naive_with(&g, opts)?,
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..orders {
        runs.push(simplify_randomized(&g, &mut rng, opts)?);
    }
    for (i, a) in runs.iter().enumerate() {
        for b in &runs[i + 1..] {
            if !same_output(&a.graph, &b.graph)? {
                let divergence = Divergence {
                    first: a.trace.clone(),
                    second: b.trace.clone(),
                };
                return Ok(ConfluenceReport {
                    runs: runs.len(),
                    divergence: Some(divergence),
                });
            }
        }
    }
    Ok(ConfluenceReport {
        runs: runs.len(),
        divergence: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplify::simplify_optimized;

    fn rel(n: usize, pairs: &[(usize, usize)]) -> TaskReachability {
        let mut r = TaskReachability::empty(task_labels(n));
        for &(i, j) in pairs {
            r.insert_index(i, j);
        }
        r.transitive_closure()
    }

    #[test]
    fn brute_force_small_cases() {
        assert_eq!(brute_force_min(&rel(0, &[])).unwrap(), 1);
        assert_eq!(brute_force_min(&rel(1, &[])).unwrap(), 2);
        assert_eq!(brute_force_min(&rel(2, &[])).unwrap(), 2);
        assert_eq!(brute_force_min(&rel(2, &[(0, 1)])).unwrap(), 3);
        // a<c, a<d, b<d
        assert_eq!(
            brute_force_min(&rel(4, &[(0, 2), (0, 3), (1, 3)])).unwrap(),
            4
        );
        assert_eq!(
            brute_force_min(&rel(4, &[(0, 1), (1, 2), (2, 3)])).unwrap(),
            5
        );
    }

    #[test]
    fn brute_force_limits() {
        assert_eq!(
            brute_force_min(&rel(5, &[])),
            Err(AoeError::TooLarge {
                count: 5,
                limit: BRUTE_FORCE_TASK_LIMIT
            })
        );
        let mut cyclic = TaskReachability::empty(task_labels(2));
        cyclic.insert_index(0, 1);
        cyclic.insert_index(1, 0);
        assert_eq!(brute_force_min(&cyclic), Err(AoeError::NotPartialOrder));
    }

    #[test]
    fn poset_counts() {
        // Labeled posets on 0..=4 elements.
        let counts: Vec<usize> = (0..=4).map(|n| all_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219]);
    }

    #[test]
    fn random_poset_extremes() {
        assert_eq!(random_poset(0, 0.5, 1).n_tasks(), 0);
        assert_eq!(random_poset(6, 0.0, 1).relation.pair_count(), 0);
        let total = random_poset(6, 1.0, 1);
        assert_eq!(total.relation.pair_count(), 15);
        assert!(total.relation.is_strict_partial_order());
        assert_eq!(random_poset(9, 0.3, 42), random_poset(9, 0.3, 42));
    }

    #[test]
    fn labels_sort_numerically() {
        let labels = task_labels(12);
        assert_eq!(labels[2].as_str(), "t02");
        assert!(labels.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn same_output_basics() {
        let p = PosetSpec {
            relation: rel(4, &[(0, 2), (0, 3), (1, 3)]),
        };
        let a = simplify_optimized(&p.expand()).unwrap().graph;
        assert!(same_output(&a, &a).unwrap());

        let chain = PosetSpec {
            relation: rel(2, &[(0, 1)]),
        };
        let b = simplify_optimized(&chain.expand()).unwrap().graph;
        assert!(!same_output(&a, &b).unwrap());
        assert_eq!(same_output(&a, &p.expand()), Err(AoeError::NotSaturated));
    }

    #[test]
    fn confluence_on_small_poset() {
        let p = PosetSpec {
            relation: rel(4, &[(0, 2), (0, 3), (1, 3)]),
        };
        let report = confluence_trial(&p, 10, 7).unwrap();
        assert!(report.passed());
        assert_eq!(report.runs, 12);
    }
}
