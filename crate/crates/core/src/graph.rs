//! Activity-on-edge multigraphs.
//!
//! An [`AoeGraph`] has milestone vertices and two kinds of edges: task edges,
//! each carrying a distinct [`TaskLabel`], and unlabeled ordering edges. At
//! most one unlabeled edge exists per ordered vertex pair; parallel task
//! edges are allowed.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{AoeError, Result};

/// Default task cap for [`AoeGraph::potential_critical_paths`].
pub const DEFAULT_PATH_ENUMERATION_LIMIT: usize = 20;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TaskLabel(Arc<str>);

impl TaskLabel {
    pub fn new(name: impl AsRef<str>) -> Result<Self> {
        let name = name.as_ref();
        if name.is_empty() {
            return Err(AoeError::EmptyLabel);
        }
        Ok(TaskLabel(Arc::from(name)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for TaskLabel {
    type Err = AoeError;

    fn from_str(s: &str) -> Result<Self> {
        TaskLabel::new(s)
    }
}

impl fmt::Display for TaskLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for TaskLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

/// Milestone identifier. When two vertices merge the survivor keeps the
/// smaller id.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    Task(TaskLabel),
    Unlabeled,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
    pub kind: EdgeKind,
}

impl Edge {
    pub fn unlabeled(tail: VertexId, head: VertexId) -> Self {
        Edge {
            tail,
            head,
            kind: EdgeKind::Unlabeled,
        }
    }

    pub fn task(tail: VertexId, head: VertexId, label: TaskLabel) -> Self {
        Edge {
            tail,
            head,
            kind: EdgeKind::Task(label),
        }
    }

    pub fn is_task(&self) -> bool {
        matches!(self.kind, EdgeKind::Task(_))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Node {
    out_unlabeled: BTreeSet<VertexId>,
    in_unlabeled: BTreeSet<VertexId>,
    out_tasks: BTreeSet<TaskLabel>,
    in_tasks: BTreeSet<TaskLabel>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AoeGraph {
    nodes: BTreeMap<VertexId, Node>,
    tasks: BTreeMap<TaskLabel, (VertexId, VertexId)>,
    unlabeled: BTreeSet<(VertexId, VertexId)>,
}

impl AoeGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns `false` if the vertex was already present.
    pub fn add_vertex(&mut self, v: VertexId) -> bool {
        if self.nodes.contains_key(&v) {
            return false;
        }
        self.nodes.insert(v, Node::default());
        true
    }

    /// Adds a vertex with an id one past the current maximum.
    pub fn add_fresh_vertex(&mut self) -> VertexId {
        let v = self
            .nodes
            .keys()
            .next_back()
            .map_or(VertexId(0), |v| VertexId(v.0 + 1));
        self.add_vertex(v);
        v
    }

    pub fn add_task(&mut self, label: TaskLabel, tail: VertexId, head: VertexId) -> Result<()> {
        self.check_endpoints(tail, head)?;
        if self.tasks.contains_key(&label) {
            return Err(AoeError::DuplicateTaskLabel(label));
        }
        self.node_mut(tail).out_tasks.insert(label.clone());
        self.node_mut(head).in_tasks.insert(label.clone());
        self.tasks.insert(label, (tail, head));
        Ok(())
    }

    /// Adds an unlabeled edge. A duplicate of an existing unlabeled edge is
    /// coalesced and `Ok(false)` is returned.
    pub fn add_unlabeled(&mut self, tail: VertexId, head: VertexId) -> Result<bool> {
        self.check_endpoints(tail, head)?;
        Ok(self.insert_unlabeled(tail, head))
    }

    pub fn remove_unlabeled(&mut self, tail: VertexId, head: VertexId) -> Result<()> {
        if !self.unlabeled.remove(&(tail, head)) {
            return Err(AoeError::UnknownEdge(tail, head));
        }
        self.node_mut(tail).out_unlabeled.remove(&head);
        self.node_mut(head).in_unlabeled.remove(&tail);
        Ok(())
    }

    fn check_endpoints(&self, tail: VertexId, head: VertexId) -> Result<()> {
        self.require(tail)?;
        self.require(head)?;
        if tail == head {
            return Err(AoeError::SelfLoop(tail));
        }
        Ok(())
    }

    fn insert_unlabeled(&mut self, tail: VertexId, head: VertexId) -> bool {
        if !self.unlabeled.insert((tail, head)) {
            return false;
        }
        self.node_mut(tail).out_unlabeled.insert(head);
        self.node_mut(head).in_unlabeled.insert(tail);
        true
    }

    fn require(&self, v: VertexId) -> Result<&Node> {
        self.nodes.get(&v).ok_or(AoeError::UnknownVertex(v))
    }

    fn node(&self, v: VertexId) -> &Node {
        &self.nodes[&v]
    }

    fn node_mut(&mut self, v: VertexId) -> &mut Node {
        self.nodes.get_mut(&v).expect("vertex checked by caller")
    }

    pub fn vertex_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn task_count(&self) -> usize {
        self.tasks.len()
    }

    pub fn unlabeled_count(&self) -> usize {
        self.unlabeled.len()
    }

    pub fn edge_count(&self) -> usize {
        self.tasks.len() + self.unlabeled.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.nodes.contains_key(&v)
    }

    pub fn contains_task(&self, label: &TaskLabel) -> bool {
        self.tasks.contains_key(label)
    }

    pub fn has_unlabeled(&self, tail: VertexId, head: VertexId) -> bool {
        self.unlabeled.contains(&(tail, head))
    }

    /// Vertices in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.nodes.keys().copied()
    }

    /// Task labels in ascending order.
    pub fn task_labels(&self) -> impl Iterator<Item = &TaskLabel> + '_ {
        self.tasks.keys()
    }

    /// `(label, tail, head)` for every task edge, by label.
    pub fn task_edges(&self) -> impl Iterator<Item = (&TaskLabel, VertexId, VertexId)> + '_ {
        self.tasks.iter().map(|(t, &(a, b))| (t, a, b))
    }

    /// Unlabeled edges in ascending `(tail, head)` order.
    pub fn unlabeled_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.unlabeled.iter().copied()
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut edges: Vec<Edge> = self
            .task_edges()
            .map(|(t, a, b)| Edge::task(a, b, t.clone()))
            .chain(self.unlabeled_edges().map(|(a, b)| Edge::unlabeled(a, b)))
            .collect();
        edges.sort();
        edges
    }

    pub fn out_tasks(&self, v: VertexId) -> Result<&BTreeSet<TaskLabel>> {
        Ok(&self.require(v)?.out_tasks)
    }

    pub fn in_tasks(&self, v: VertexId) -> Result<&BTreeSet<TaskLabel>> {
        Ok(&self.require(v)?.in_tasks)
    }

    pub fn out_unlabeled(&self, v: VertexId) -> Result<&BTreeSet<VertexId>> {
        Ok(&self.require(v)?.out_unlabeled)
    }

    pub fn in_unlabeled(&self, v: VertexId) -> Result<&BTreeSet<VertexId>> {
        Ok(&self.require(v)?.in_unlabeled)
    }

    /// Heads of all out-edges, task and unlabeled.
    pub fn out_neighbors(&self, v: VertexId) -> Result<BTreeSet<VertexId>> {
        let node = self.require(v)?;
        let mut out = node.out_unlabeled.clone();
        out.extend(node.out_tasks.iter().map(|t| self.tasks[t].1));
        Ok(out)
    }

    /// Tails of all in-edges, task and unlabeled.
    pub fn in_neighbors(&self, v: VertexId) -> Result<BTreeSet<VertexId>> {
        let node = self.require(v)?;
        let mut inc = node.in_unlabeled.clone();
        inc.extend(node.in_tasks.iter().map(|t| self.tasks[t].0));
        Ok(inc)
    }

    /// Number of out-edges counted with multiplicity.
    pub fn out_degree(&self, v: VertexId) -> Result<usize> {
        let node = self.require(v)?;
        Ok(node.out_unlabeled.len() + node.out_tasks.len())
    }

    /// Number of in-edges counted with multiplicity.
    pub fn in_degree(&self, v: VertexId) -> Result<usize> {
        let node = self.require(v)?;
        Ok(node.in_unlabeled.len() + node.in_tasks.len())
    }

    /// Calls `f(head)` once per out-edge of `v`, parallel edges included.
    pub(crate) fn for_each_out_edge(&self, v: VertexId, mut f: impl FnMut(VertexId)) {
        let node = self.node(v);
        for &w in &node.out_unlabeled {
            f(w);
        }
        for t in &node.out_tasks {
            f(self.tasks[t].1);
        }
    }

    pub(crate) fn for_each_in_edge(&self, v: VertexId, mut f: impl FnMut(VertexId)) {
        let node = self.node(v);
        for &w in &node.in_unlabeled {
            f(w);
        }
        for t in &node.in_tasks {
            f(self.tasks[t].0);
        }
    }

    /// Number of edges `tail -> head`, task and unlabeled.
    pub fn multiplicity(&self, tail: VertexId, head: VertexId) -> usize {
        let Some(node) = self.nodes.get(&tail) else {
            return 0;
        };
        let tasks = node
            .out_tasks
            .iter()
            .filter(|t| self.tasks[*t].1 == head)
            .count();
        tasks + usize::from(node.out_unlabeled.contains(&head))
    }

    /// Start milestone of a task.
    pub fn st(&self, label: &TaskLabel) -> Result<VertexId> {
        self.tasks
            .get(label)
            .map(|e| e.0)
            .ok_or_else(|| AoeError::UnknownTask(label.clone()))
    }

    /// End milestone of a task.
    pub fn end(&self, label: &TaskLabel) -> Result<VertexId> {
        self.tasks
            .get(label)
            .map(|e| e.1)
            .ok_or_else(|| AoeError::UnknownTask(label.clone()))
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_ok()
    }

    /// Kahn's algorithm, always emitting the smallest ready vertex first.
    pub fn topological_order(&self) -> Result<Vec<VertexId>> {
        let mut indegree: BTreeMap<VertexId, usize> = self
            .nodes
            .iter()
            .map(|(&v, n)| (v, n.in_unlabeled.len() + n.in_tasks.len()))
            .collect();
        let mut ready: BinaryHeap<Reverse<VertexId>> = indegree
            .iter()
            .filter(|(_, &d)| d == 0)
            .map(|(&v, _)| Reverse(v))
            .collect();
        let mut order = Vec::with_capacity(self.nodes.len());
        while let Some(Reverse(v)) = ready.pop() {
            order.push(v);
            self.for_each_out_edge(v, |w| {
                let d = indegree.get_mut(&w).expect("edge endpoint is live");
                *d -= 1;
                if *d == 0 {
                    ready.push(Reverse(w));
                }
            });
        }
        if order.len() == self.nodes.len() {
            Ok(order)
        } else {
            Err(AoeError::Cycle)
        }
    }

    /// Dense `0..n` numbering of the live vertices, ascending by id.
    pub fn dense_index(&self) -> DenseIndex {
        DenseIndex::new(self.vertices())
    }

    /// `rows[i]` holds the dense indices reachable from vertex `i` by a
    /// path of one or more edges.
    pub(crate) fn reachability_rows(&self, index: &DenseIndex) -> Result<Vec<FixedBitSet>> {
        let order = self.topological_order()?;
        let n = index.len();
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for &v in order.iter().rev() {
            let i = index.of(v);
            let mut row = std::mem::take(&mut rows[i]);
            self.for_each_out_edge(v, |w| {
                let j = index.of(w);
                row.insert(j);
                row.union_with(&rows[j]);
            });
            rows[i] = row;
        }
        Ok(rows)
    }

    /// Whether `from` reaches `to` by a path of at least one edge.
    pub fn has_path(&self, from: VertexId, to: VertexId) -> Result<bool> {
        self.require(from)?;
        self.require(to)?;
        let mut seen = BTreeSet::new();
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            let mut found = false;
            self.for_each_out_edge(v, |w| {
                if w == to {
                    found = true;
                } else if seen.insert(w) {
                    stack.push(w);
                }
            });
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `t` reaches `t2` when `t` ends where `t2` starts or a path joins them.
    pub fn task_reaches(&self, t: &TaskLabel, t2: &TaskLabel) -> Result<bool> {
        let end = self.end(t)?;
        let start = self.st(t2)?;
        if t == t2 {
            return Err(AoeError::SameTask(t.clone()));
        }
        Ok(end == start || self.has_path(end, start)?)
    }

    pub fn task_reachability(&self) -> Result<TaskReachability> {
        let index = self.dense_index();
        let rows = self.reachability_rows(&index)?;
        let labels: Vec<TaskLabel> = self.tasks.keys().cloned().collect();
        let mut rel = TaskReachability::empty(labels);
        let ends: Vec<usize> = self.tasks.values().map(|e| index.of(e.1)).collect();
        let starts: Vec<usize> = self.tasks.values().map(|e| index.of(e.0)).collect();
        for (i, &end) in ends.iter().enumerate() {
            for (j, &start) in starts.iter().enumerate() {
                if i != j && (end == start || rows[end].contains(start)) {
                    rel.rows[i].insert(j);
                }
            }
        }
        Ok(rel)
    }

    /// Maximal task chains under task reachability.
    pub fn potential_critical_paths(&self) -> Result<BTreeSet<Vec<TaskLabel>>> {
        self.potential_critical_paths_with_limit(DEFAULT_PATH_ENUMERATION_LIMIT)
    }

    pub fn potential_critical_paths_with_limit(
        &self,
        limit: usize,
    ) -> Result<BTreeSet<Vec<TaskLabel>>> {
        if self.task_count() > limit {
            return Err(AoeError::SizeLimitExceeded {
                count: self.task_count(),
                limit,
            });
        }
        Ok(self.task_reachability()?.maximal_chains())
    }

    /// Merges `u` and `v` into `min(u, v)` and returns the survivor.
    ///
    /// Unlabeled edges between the two are dropped and duplicate unlabeled
    /// edges coalesced. Acyclicity of the result is not checked here.
    pub fn merge_vertices(&mut self, u: VertexId, v: VertexId) -> Result<VertexId> {
        self.require(u)?;
        self.require(v)?;
        if u == v {
            return Err(AoeError::SameVertex(u));
        }
        for (a, b) in [(u, v), (v, u)] {
            if let Some(t) = self
                .node(a)
                .out_tasks
                .iter()
                .find(|t| self.tasks[*t].1 == b)
            {
                return Err(AoeError::MergeWouldDropTask(u, v, t.clone()));
            }
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let node = self.nodes.remove(&gone).expect("checked above");
        for w in node.out_unlabeled {
            self.unlabeled.remove(&(gone, w));
            self.node_mut(w).in_unlabeled.remove(&gone);
            if w != keep {
                self.insert_unlabeled(keep, w);
            }
        }
        for w in node.in_unlabeled {
            self.unlabeled.remove(&(w, gone));
            self.node_mut(w).out_unlabeled.remove(&gone);
            if w != keep {
                self.insert_unlabeled(w, keep);
            }
        }
        for t in node.out_tasks {
            self.tasks.get_mut(&t).expect("task of live vertex").0 = keep;
            self.node_mut(keep).out_tasks.insert(t);
        }
        for t in node.in_tasks {
            self.tasks.get_mut(&t).expect("task of live vertex").1 = keep;
            self.node_mut(keep).in_tasks.insert(t);
        }
        Ok(keep)
    }
}

/// Same task set and the same task reachability relation.
///
/// Agreement of the relation is equivalent to agreement of the potential
/// critical path sets, so no path enumeration is needed.
pub fn equivalent(g: &AoeGraph, h: &AoeGraph) -> Result<bool> {
    Ok(g.task_reachability()? == h.task_reachability()?)
}

/// Maps live vertex ids onto `0..n` in ascending order.
#[derive(Clone, Debug)]
pub struct DenseIndex {
    ids: Vec<VertexId>,
    slots: Vec<usize>,
}

impl DenseIndex {
    fn new(ids: impl Iterator<Item = VertexId>) -> Self {
        let ids: Vec<VertexId> = ids.collect();
        let max = ids.iter().map(|v| v.index() + 1).max().unwrap_or(0);
        let mut slots = vec![usize::MAX; max];
        for (i, v) in ids.iter().enumerate() {
            slots[v.index()] = i;
        }
        DenseIndex { ids, slots }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Panics if `v` was not live when the index was built.
    pub fn of(&self, v: VertexId) -> usize {
        let i = self.slots[v.index()];
        assert!(i != usize::MAX, "vertex {v} not in index");
        i
    }

    pub fn get(&self, v: VertexId) -> Option<usize> {
        self.slots
            .get(v.index())
            .copied()
            .filter(|&i| i != usize::MAX)
    }

    pub fn id(&self, i: usize) -> VertexId {
        self.ids[i]
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }
}

/// The "has a path to" relation over a fixed, sorted task list.
#[derive(Clone, PartialEq, Eq)]
pub struct TaskReachability {
    labels: Vec<TaskLabel>,
    rows: Vec<FixedBitSet>,
}

impl TaskReachability {
    /// Empty relation over `labels`; the labels are sorted and deduplicated.
    pub fn empty(mut labels: Vec<TaskLabel>) -> Self {
        labels.sort();
        labels.dedup();
        let n = labels.len();
        TaskReachability {
            labels,
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_pairs<'a>(
        labels: Vec<TaskLabel>,
        pairs: impl IntoIterator<Item = (&'a TaskLabel, &'a TaskLabel)>,
    ) -> Result<Self> {
        let mut rel = Self::empty(labels);
        for (a, b) in pairs {
            let i = rel
                .index_of(a)
                .ok_or_else(|| AoeError::UnknownTask(a.clone()))?;
            let j = rel
                .index_of(b)
                .ok_or_else(|| AoeError::UnknownTask(b.clone()))?;
            rel.rows[i].insert(j);
        }
        Ok(rel)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[TaskLabel] {
        &self.labels
    }

    pub fn index_of(&self, label: &TaskLabel) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    pub fn contains(&self, a: &TaskLabel, b: &TaskLabel) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.rows[i].contains(j),
            _ => false,
        }
    }

    pub fn contains_index(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn insert_index(&mut self, i: usize, j: usize) {
        self.rows[i].insert(j);
    }

    /// Successor indices of task `i`.
    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[i].ones()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&TaskLabel, &TaskLabel)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(move |(i, row)| row.ones().map(move |j| (&self.labels[i], &self.labels[j])))
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum()
    }

    pub fn is_irreflexive(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| !r.contains(i))
    }

    pub fn is_transitive(&self) -> bool {
        self.rows
            .iter()
            .all(|row| row.ones().all(|j| self.rows[j].is_subset(row)))
    }

    pub fn is_strict_partial_order(&self) -> bool {
        self.is_irreflexive() && self.is_transitive()
    }

    /// Smallest transitive relation containing this one.
    pub fn transitive_closure(&self) -> Self {
        let mut rows = self.rows.clone();
        // Warshall over bit rows.
        for k in 0..rows.len() {
            let via = rows[k].clone();
            for row in rows.iter_mut() {
                if row.contains(k) {
                    row.union_with(&via);
                }
            }
        }
        TaskReachability {
            labels: self.labels.clone(),
            rows,
        }
    }

    /// Covering pairs of a transitive relation: `(a, b)` with no `c` strictly
    /// between them.
    pub fn transitive_reduction(&self) -> Self {
        let n = self.len();
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in self.rows.iter().enumerate() {
            let mut implied = FixedBitSet::with_capacity(n);
            for k in row.ones() {
                implied.union_with(&self.rows[k]);
            }
            let mut cover = row.clone();
            cover.difference_with(&implied);
            rows[i] = cover;
        }
        TaskReachability {
            labels: self.labels.clone(),
            rows,
        }
    }

    /// Maximal chains of a strict partial order, as label sequences.
    ///
    /// Each maximal chain is a walk in the covering relation from a minimal
    /// to a maximal element.
    pub fn maximal_chains(&self) -> BTreeSet<Vec<TaskLabel>> {
        let cover = self.transitive_reduction();
        let n = self.len();
        let mut has_pred = FixedBitSet::with_capacity(n);
        for row in &cover.rows {
            has_pred.union_with(row);
        }
        let mut out = BTreeSet::new();
        let mut chain = Vec::new();
        for start in (0..n).filter(|&i| !has_pred.contains(i)) {
            cover.extend_chains(start, &mut chain, &mut out);
        }
        out
    }

    fn extend_chains(&self, at: usize, chain: &mut Vec<usize>, out: &mut BTreeSet<Vec<TaskLabel>>) {
        chain.push(at);
        if self.rows[at].is_clear() {
            out.insert(chain.iter().map(|&i| self.labels[i].clone()).collect());
        } else {
            for next in self.rows[at].ones() {
                self.extend_chains(next, chain, out);
            }
        }
        chain.pop();
    }
}

impl fmt::Debug for TaskReachability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.pairs().map(|(a, b)| format!("{a}<{b}")))
            .finish()
    }
}
