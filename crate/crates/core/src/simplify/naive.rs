use rand::seq::SliceRandom;
use rand::Rng;

use super::rules::{applicable_rules, apply_unchecked, first_applicable};
use super::{Simplified, SimplifyOptions, StepChecker};
use crate::error::{AoeError, Result};
use crate::graph::AoeGraph;

/// Applies the first available rule until none applies.
pub fn simplify_naive(g: &AoeGraph) -> Result<Simplified> {
    simplify_naive_with(g, SimplifyOptions::default())
}

pub fn simplify_naive_with(g: &AoeGraph, opts: SimplifyOptions) -> Result<Simplified> {
    run(g, opts, first_applicable)
}

/// Applies a uniformly random available rule until none applies.
pub fn simplify_randomized<R: Rng>(
    g: &AoeGraph,
    rng: &mut R,
    opts: SimplifyOptions,
) -> Result<Simplified> {
    run(g, opts, |g| applicable_rules(g).choose(rng).copied())
}

fn run(
    g: &AoeGraph,
    opts: SimplifyOptions,
    mut pick: impl FnMut(&AoeGraph) -> Option<super::RuleApplication>,
) -> Result<Simplified> {
    if !g.is_acyclic() {
        return Err(AoeError::Cycle);
    }
    let checker = StepChecker::new(g, opts);
    let mut graph = g.clone();
    let mut trace = Vec::new();
    let mut iterations = 0;
    loop {
        iterations += 1;
        let Some(step) = pick(&graph) else { break };
        apply_unchecked(&mut graph, &step);
        checker.check(&graph, &step);
        trace.push(step);
    }
    Ok(Simplified {
        graph,
        trace,
        iterations,
    })
}
