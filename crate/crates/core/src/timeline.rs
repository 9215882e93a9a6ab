//! Earliest-start levels and critical tasks once durations are known.
//!
//! Generic over the duration scalar. Critical tasks are found by exact
//! comparison of path lengths, so integer or rational durations give exact
//! answers; floating-point durations are exact only while sums stay exactly
//! representable.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use num_traits::Num;

use crate::error::{AoeError, Result};
use crate::graph::{AoeGraph, TaskLabel, VertexId};

/// Scalar usable as a task duration.
pub trait Duration: Num + Copy + PartialOrd + Debug {}

impl<T: Num + Copy + PartialOrd + Debug> Duration for T {}

/// Positive duration per task.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DurationMap<D> {
    durations: BTreeMap<TaskLabel, D>,
}

impl<D: Duration> DurationMap<D> {
    pub fn new() -> Self {
        DurationMap {
            durations: BTreeMap::new(),
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (TaskLabel, D)>) -> Result<Self> {
        let mut map = DurationMap::new();
        for (t, d) in pairs {
            map.insert(t, d)?;
        }
        Ok(map)
    }

    pub fn insert(&mut self, task: TaskLabel, d: D) -> Result<()> {
        if d <= D::zero() {
            return Err(AoeError::NonPositiveDuration(task));
        }
        self.durations.insert(task, d);
        Ok(())
    }

    pub fn get(&self, task: &TaskLabel) -> Option<D> {
        self.durations.get(task).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TaskLabel, D)> + '_ {
        self.durations.iter().map(|(t, &d)| (t, d))
    }

    pub fn len(&self) -> usize {
        self.durations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.durations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Timeline<D> {
    /// Earliest time each milestone can be reached.
    pub level: BTreeMap<VertexId, D>,
    pub makespan: D,
    /// Tasks lying on at least one longest source-to-sink path.
    pub critical_tasks: BTreeSet<TaskLabel>,
}

fn max<D: PartialOrd>(a: D, b: D) -> D {
    if b > a {
        b
    } else {
        a
    }
}

pub fn schedule<D: Duration>(g: &AoeGraph, durations: &DurationMap<D>) -> Result<Timeline<D>> {
    let order = g.topological_order()?;
    let mut weight = BTreeMap::new();
    for t in g.task_labels() {
        let d = durations
            .get(t)
            .ok_or_else(|| AoeError::MissingDuration(t.clone()))?;
        weight.insert(t.clone(), d);
    }

    // Longest path from any source into each vertex.
    let mut level: BTreeMap<VertexId, D> = order.iter().map(|&v| (v, D::zero())).collect();
    for &v in &order {
        let at = level[&v];
        for &w in g.out_unlabeled(v)? {
            let slot = level.get_mut(&w).expect("live vertex");
            *slot = max(*slot, at);
        }
        for t in g.out_tasks(v)? {
            let slot = level.get_mut(&g.end(t)?).expect("live vertex");
            *slot = max(*slot, at + weight[t]);
        }
    }
    // Longest path from each vertex to any sink.
    let mut tail: BTreeMap<VertexId, D> = order.iter().map(|&v| (v, D::zero())).collect();
    for &v in order.iter().rev() {
        let mut best = D::zero();
        for w in g.out_unlabeled(v)? {
            best = max(best, tail[w]);
        }
        for t in g.out_tasks(v)? {
            best = max(best, weight[t] + tail[&g.end(t)?]);
        }
        tail.insert(v, best);
    }

    let makespan = level.values().copied().fold(D::zero(), max);
    let critical_tasks = g
        .task_edges()
        .filter(|(t, a, b)| level[a] + weight[*t] + tail[b] == makespan)
        .map(|(t, _, _)| t.clone())
        .collect();
    Ok(Timeline {
        level,
        makespan,
        critical_tasks,
    })
}
