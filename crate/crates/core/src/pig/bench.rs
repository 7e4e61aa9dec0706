//! Wall-clock scaling harness for the proper-interval solver.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::Result;
use crate::generate;
use crate::pig::solver::mntds_pig;

/// One timed solver run.
#[derive(Clone, Debug, Serialize)]
pub struct BenchSample {
    pub n: usize,
    pub m: usize,
    /// Fastest of the repeated runs, in seconds.
    pub seconds: f64,
    pub solution_size: usize,
}

/// Times `mntds_pig`, recognition included, on a random proper interval
/// graph of `n` vertices. The reported time is the minimum over `repeats`
/// runs; the graph is generated once, outside the timed region.
pub fn mntds_pig_linear_bench(n: usize, density: f64, seed: u64, repeats: usize) -> Result<BenchSample> {
    let graph = generate::random_proper_interval(n, density, seed, true)?;
    let mut best = Duration::MAX;
    let mut size = 0;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        let (set, _) = mntds_pig(&graph)?;
        best = best.min(start.elapsed());
        size = set.len();
    }
    Ok(BenchSample {
        n,
        m: graph.m(),
        seconds: best.as_secs_f64(),
        solution_size: size,
    })
}

/// Least-squares line `y = slope·x + intercept` and its relative residuals.
#[derive(Clone, Debug, Serialize)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    /// `|y - ŷ| / y` per point, in input order.
    pub relative_residuals: Vec<f64>,
}

impl LinearFit {
    pub fn max_relative_residual(&self) -> f64 {
        self.relative_residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Ordinary least squares over `(x, y)` points; `None` with fewer than two
/// distinct `x` values.
pub fn fit_linear(points: &[(f64, f64)]) -> Option<LinearFit> {
    weighted_fit(points, |_| 1.0)
}

/// Least squares on relative errors, minimizing `Σ ((ŷ − y) / y)²`, so every
/// point counts alike whatever its magnitude. Needs positive `y` values.
pub fn fit_linear_relative(points: &[(f64, f64)]) -> Option<LinearFit> {
    if points.iter().any(|p| p.1 <= 0.0) {
        return None;
    }
    weighted_fit(points, |y| 1.0 / (y * y))
}

fn weighted_fit(points: &[(f64, f64)], weight: impl Fn(f64) -> f64) -> Option<LinearFit> {
    if points.len() < 2 {
        return None;
    }
    let w: Vec<f64> = points.iter().map(|p| weight(p.1)).collect();
    let total: f64 = w.iter().sum();
    let mean_x = points.iter().zip(&w).map(|(p, w)| w * p.0).sum::<f64>() / total;
    let mean_y = points.iter().zip(&w).map(|(p, w)| w * p.1).sum::<f64>() / total;
    let sxx: f64 = points.iter().zip(&w).map(|(p, w)| w * (p.0 - mean_x).powi(2)).sum();
    if sxx <= f64::EPSILON * total * mean_x.abs().max(1.0).powi(2) {
        return None;
    }
    let sxy: f64 = points.iter().zip(&w).map(|(p, w)| w * (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let relative_residuals = points
        .iter()
        .map(|&(x, y)| ((y - (slope * x + intercept)) / y).abs())
        .collect();
    Some(LinearFit {
        slope,
        intercept,
        relative_residuals,
    })
}
