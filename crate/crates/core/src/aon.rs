//! Activity-on-node dependency descriptions.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{AoeError, Result};
use crate::graph::{TaskLabel, TaskReachability};

/// Tasks plus "left precedes right" dependency pairs.
///
/// Task order is the insertion order and is kept for serialization and for
/// vertex numbering during expansion. Dependencies need not be transitively
/// reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AonGraph {
    tasks: Vec<TaskLabel>,
    positions: BTreeMap<TaskLabel, usize>,
    deps: BTreeSet<(TaskLabel, TaskLabel)>,
}

impl AonGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_task(&mut self, label: TaskLabel) -> Result<()> {
        if self.positions.contains_key(&label) {
            return Err(AoeError::DuplicateTask(label));
        }
        self.positions.insert(label.clone(), self.tasks.len());
        self.tasks.push(label);
        Ok(())
    }

    /// Records that `before` must finish before `after` starts.
    pub fn add_dep(&mut self, before: TaskLabel, after: TaskLabel) -> Result<()> {
        if !self.positions.contains_key(&after) {
            return Err(AoeError::UnknownTask(after));
        }
        if !self.positions.contains_key(&before) {
            return Err(AoeError::UnknownDep {
                task: after,
                dep: before,
            });
        }
        if before == after {
            return Err(AoeError::Cycle);
        }
        self.deps.insert((before, after));
        Ok(())
    }

    pub fn tasks(&self) -> &[TaskLabel] {
        &self.tasks
    }

    pub fn task_count(&self) -> usize {
        self.tasks.len()
    }

    pub fn position(&self, label: &TaskLabel) -> Option<usize> {
        self.positions.get(label).copied()
    }

    pub fn deps(&self) -> impl Iterator<Item = (&TaskLabel, &TaskLabel)> + '_ {
        self.deps.iter().map(|(a, b)| (a, b))
    }

    /// Direct prerequisites of `task`, sorted by label.
    pub fn prerequisites(&self, task: &TaskLabel) -> Vec<&TaskLabel> {
        self.deps
            .iter()
            .filter(|(_, b)| b == task)
            .map(|(a, _)| a)
            .collect()
    }

    /// The dependency pairs as a relation, without closing them.
    pub fn direct_relation(&self) -> TaskReachability {
        TaskReachability::from_pairs(self.tasks.clone(), self.deps())
            .expect("deps only reference known tasks")
    }

    /// Transitive closure of the dependencies; errors if they are cyclic.
    pub fn reachability(&self) -> Result<TaskReachability> {
        let closure = self.direct_relation().transitive_closure();
        if closure.is_irreflexive() {
            Ok(closure)
        } else {
            Err(AoeError::Cycle)
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.reachability().is_ok()
    }

    /// Builds an AoN graph whose tasks are `rel`'s labels in sorted order and
    /// whose dependencies are exactly `rel`'s pairs.
    pub fn from_relation(rel: &TaskReachability) -> Self {
        let mut aon = AonGraph::new();
        for t in rel.labels() {
            aon.add_task(t.clone()).expect("labels are distinct");
        }
        for (a, b) in rel.pairs() {
            aon.deps.insert((a.clone(), b.clone()));
        }
        aon
    }
}
