//! Rewriting an AOE graph to its vertex-minimal equivalent.
//!
//! [`simplify_naive`] applies one rule at a time, found by direct graph
//! search. [`simplify_optimized`] recomputes a capped path-count matrix per
//! round, sweeps every redundant unlabeled edge at once, merges one rule-1
//! group if any exists and otherwise contracts one rule-3 edge. Both reach
//! the same output on canonical inputs.

mod matrix;
mod merge_detection;
mod naive;
mod optimized;
mod rules;

pub use matrix::{compute_path_counts, PathCountMatrix};
pub use merge_detection::{merge_detection, MergeGroup};
pub use naive::{simplify_naive, simplify_naive_with, simplify_randomized};
pub use optimized::{rule2_sweep, rule3_scan, simplify_optimized, simplify_optimized_with};
pub use rules::{
    applicable_rules, apply_rule, first_applicable, is_applicable, is_saturated, rule1_applicable,
    rule1_backward, rule1_forward, rule2_applicable, rule3_applicable, Rule1Direction,
    RuleApplication,
};

use crate::graph::{AoeGraph, TaskReachability};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimplifyOptions {
    /// Re-check acyclicity and task reachability after every step. Panics on
    /// a violation.
    pub verify_steps: bool,
}

impl Default for SimplifyOptions {
    fn default() -> Self {
        SimplifyOptions {
            verify_steps: cfg!(debug_assertions),
        }
    }
}

/// A saturated graph together with the steps that produced it.
#[derive(Clone, Debug)]
pub struct Simplified {
    pub graph: AoeGraph,
    pub trace: Vec<RuleApplication>,
    /// Driver rounds, including the final one that found nothing to do.
    pub iterations: usize,
}

/// Which driver to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Engine {
    Naive,
    #[default]
    Optimized,
}

pub fn simplify(g: &AoeGraph, engine: Engine) -> crate::Result<Simplified> {
    simplify_with(g, engine, SimplifyOptions::default())
}

pub fn simplify_with(
    g: &AoeGraph,
    engine: Engine,
    opts: SimplifyOptions,
) -> crate::Result<Simplified> {
    match engine {
        Engine::Naive => simplify_naive_with(g, opts),
        Engine::Optimized => simplify_optimized_with(g, opts),
    }
}

struct StepChecker {
    expected: Option<TaskReachability>,
}

impl StepChecker {
    fn new(g: &AoeGraph, opts: SimplifyOptions) -> Self {
        let expected = opts
            .verify_steps
            .then(|| g.task_reachability().expect("checked acyclic"));
        StepChecker { expected }
    }

    fn check(&self, g: &AoeGraph, step: &RuleApplication) {
        if let Some(expected) = &self.expected {
            let now = g
                .task_reachability()
                .unwrap_or_else(|_| panic!("{step} created a cycle"));
            assert_eq!(&now, expected, "{step} changed task reachability");
        }
    }
}
