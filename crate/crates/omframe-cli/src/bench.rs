use std::time::Instant;

use clap::Args;
use omframe::random::{random_vector, seeded};
use omframe::{omf, Field};
use serde_json::json;

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Vector lengths.
    #[arg(long, value_delimiter = ',', default_value = "4")]
    n: Vec<usize>,
    /// Degrees.
    #[arg(long, value_delimiter = ',', default_value = "8,16,32,64")]
    d: Vec<usize>,
    /// Random inputs per cell.
    #[arg(long, default_value_t = 5)]
    samples: usize,
    /// Coefficients are drawn uniformly from [-bound, bound].
    #[arg(long, default_value_t = 10)]
    bound: i64,
}

struct Cell {
    n: usize,
    d: usize,
    times_ms: Vec<f64>,
}

impl Cell {
    fn median(&self) -> f64 {
        let mut t = self.times_ms.clone();
        t.sort_by(f64::total_cmp);
        let m = t.len() / 2;
        if t.len() % 2 == 1 {
            t[m]
        } else {
            (t[m - 1] + t[m]) / 2.0
        }
    }
}

/// Least-squares slope of `ln y` against `ln x`.
fn log_log_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

pub fn run<F: Field>(field: &F, seed: u64, as_json: bool, args: &BenchArgs) -> Result<std::process::ExitCode, String> {
    if args.samples == 0 {
        return Err("--samples must be positive".into());
    }
    if let Some(n) = args.n.iter().find(|&&n| n < 2) {
        return Err(format!("vector length {n} is too small; need n >= 2"));
    }
    let mut cells = Vec::new();
    for &n in &args.n {
        for &d in &args.d {
            let mut rng = seeded(seed ^ ((n as u64) << 32) ^ d as u64);
            let inputs: Vec<_> = (0..args.samples)
                .map(|_| random_vector(field, &mut rng, n, d, args.bound))
                .collect();
            omf(field, &inputs[0]).map_err(|e| e.to_string())?;
            let times_ms = inputs
                .iter()
                .map(|a| {
                    let start = Instant::now();
                    let frame = omf(field, a);
                    let t = start.elapsed().as_secs_f64() * 1e3;
                    std::hint::black_box(frame).map(|_| t).map_err(|e| e.to_string())
                })
                .collect::<Result<Vec<_>, _>>()?;
            cells.push(Cell { n, d, times_ms });
        }
    }
    let slopes: Vec<(usize, Option<f64>)> = args
        .n
        .iter()
        .map(|&n| {
            let pts: Vec<(f64, f64)> = cells
                .iter()
                .filter(|c| c.n == n)
                .map(|c| (c.d as f64, c.median()))
                .collect();
            (n, log_log_slope(&pts))
        })
        .collect();

    if as_json {
        let doc = json!({
            "schema": 1,
            "command": "bench",
            "field": field.name(),
            "seed": seed,
            "samples": args.samples,
            "cells": cells.iter().map(|c| json!({
                "n": c.n,
                "d": c.d,
                "median_ms": c.median(),
                "times_ms": c.times_ms,
            })).collect::<Vec<_>>(),
            "slopes": slopes.iter().map(|(n, s)| json!({"n": n, "slope": s})).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        println!("field {}  seed {}  samples {}", field.name(), seed, args.samples);
        println!("{:>4} {:>5} {:>12} {:>12} {:>12}", "n", "d", "median_ms", "min_ms", "max_ms");
        for c in &cells {
            let min = c.times_ms.iter().copied().fold(f64::INFINITY, f64::min);
            let max = c.times_ms.iter().copied().fold(0.0, f64::max);
            println!("{:>4} {:>5} {:>12.4} {:>12.4} {:>12.4}", c.n, c.d, c.median(), min, max);
        }
        for (n, s) in &slopes {
            match s {
                Some(s) => println!("n = {n}: log-log slope in d = {s:.3}"),
                None => println!("n = {n}: log-log slope in d = n/a"),
            }
        }
    }
    Ok(std::process::ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::log_log_slope;

    #[test]
    fn slope_of_power_law() {
        let pts: Vec<(f64, f64)> = [8.0, 16.0, 32.0, 64.0].iter().map(|&d: &f64| (d, 0.5 * d.powi(3))).collect();
        assert!((log_log_slope(&pts).unwrap() - 3.0).abs() < 1e-9);
        assert!(log_log_slope(&pts[..1]).is_none());
    }
}
