//! Scaling benchmark for the two simplification engines.

use std::fmt::Write as _;
use std::time::Instant;

use crate::error::Result;
use crate::oracle::random_poset;
use crate::simplify::{simplify_naive_with, simplify_optimized_with, SimplifyOptions};

pub const DEFAULT_BENCH_DENSITY: f64 = 0.02;

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub density: f64,
    pub seed: u64,
    /// Each engine is timed this many times per size and the fastest run kept.
    pub repeats: usize,
    pub run_naive: bool,
}

impl BenchConfig {
    /// Sizes 50, 100, 200, ... doubling while at most `max_tasks`.
    pub fn up_to(max_tasks: usize, seed: u64) -> Self {
        let sizes = std::iter::successors(Some(50usize), |n| Some(n * 2))
            .take_while(|&n| n <= max_tasks)
            .collect();
        BenchConfig {
            sizes,
            density: DEFAULT_BENCH_DENSITY,
            seed,
            repeats: 1,
            run_naive: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub tasks: usize,
    pub input_vertices: usize,
    pub input_unlabeled: usize,
    pub output_vertices: usize,
    pub output_unlabeled: usize,
    pub optimized_secs: f64,
    pub naive_secs: Option<f64>,
}

fn fastest<T>(repeats: usize, mut f: impl FnMut() -> Result<T>) -> Result<(T, f64)> {
    let mut best: Option<(T, f64)> = None;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        let out = f()?;
        let secs = start.elapsed().as_secs_f64();
        if best.as_ref().is_none_or(|(_, b)| secs < *b) {
            best = Some((out, secs));
        }
    }
    Ok(best.expect("at least one run"))
}

pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    let opts = SimplifyOptions {
        verify_steps: false,
    };
    let mut rows = Vec::new();
    for (i, &n) in cfg.sizes.iter().enumerate() {
        let g = random_poset(n, cfg.density, cfg.seed.wrapping_add(i as u64)).expand();
        let (out, optimized_secs) = fastest(cfg.repeats, || simplify_optimized_with(&g, opts))?;
        let naive_secs = if cfg.run_naive {
            Some(fastest(cfg.repeats, || simplify_naive_with(&g, opts))?.1)
        } else {
            None
        };
        rows.push(BenchRow {
            tasks: n,
            input_vertices: g.vertex_count(),
            input_unlabeled: g.unlabeled_count(),
            output_vertices: out.graph.vertex_count(),
            output_unlabeled: out.graph.unlabeled_count(),
            optimized_secs,
            naive_secs,
        });
    }
    Ok(rows)
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn fitted_exponent(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if logs.len() < 2 {
        return None;
    }
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Growth exponent of optimized-engine time in the number of tasks.
pub fn optimized_exponent(rows: &[BenchRow]) -> Option<f64> {
    fitted_exponent(
        &rows
            .iter()
            .map(|r| (r.tasks as f64, r.optimized_secs))
            .collect::<Vec<_>>(),
    )
}

pub fn format_table(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:>6} {:>9} {:>9} {:>9} {:>9} {:>12} {:>12}",
        "tasks", "in_vert", "in_unlab", "out_vert", "out_unlab", "optimized_s", "naive_s"
    )
    .unwrap();
    for r in rows {
        let naive = r
            .naive_secs
            .map_or_else(|| "-".to_string(), |s| format!("{s:.6}"));
        writeln!(
            out,
            "{:>6} {:>9} {:>9} {:>9} {:>9} {:>12.6} {:>12}",
            r.tasks,
            r.input_vertices,
            r.input_unlabeled,
            r.output_vertices,
            r.output_unlabeled,
            r.optimized_secs,
            naive
        )
        .unwrap();
    }
    if let Some(e) = optimized_exponent(rows) {
        writeln!(out, "optimized exponent: {e:.3}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_double() {
        assert_eq!(BenchConfig::up_to(400, 0).sizes, vec![50, 100, 200, 400]);
        assert_eq!(BenchConfig::up_to(399, 0).sizes, vec![50, 100, 200]);
        assert!(BenchConfig::up_to(10, 0).sizes.is_empty());
    }

    #[test]
    fn exponent_of_power_law() {
        let pts: Vec<_> = [1.0, 2.0, 4.0, 8.0]
            .iter()
            .map(|&x: &f64| (x, 3.0 * x.powi(3)))
            .collect();
        assert!((fitted_exponent(&pts).unwrap() - 3.0).abs() < 1e-9);
        assert_eq!(fitted_exponent(&pts[..1]), None);
    }

    #[test]
    fn small_run_reduces() {
        let cfg = BenchConfig {
            sizes: vec![10, 20],
            density: 0.2,
            seed: 3,
            repeats: 1,
            run_naive: true,
        };
        let rows = run_bench(&cfg).unwrap();
        assert_eq!(rows.len(), 2);
        for r in &rows {
            assert_eq!(r.input_vertices, 2 * r.tasks + 2);
            assert!(r.output_vertices <= r.input_vertices);
        }
        assert!(format_table(&rows).contains("optimized exponent"));
    }
}
