use std::fmt;
use std::time::{Duration, Instant};

use qderange_core::{generate, CoeffSeq, MethodTag};

use crate::CliError;

/// Generators that can be benchmarked. The oracle is factorial and excluded.
pub const BENCH_METHODS: [MethodTag; 3] = [
    MethodTag::Recursive,
    MethodTag::Wachs,
    MethodTag::CoeffRecurrence,
];

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub n: u32,
    pub coefficients: usize,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub method: MethodTag,
    pub rows: Vec<BenchRow>,
    /// Whether all benchmarkable methods agree at the largest `n`.
    pub agree_at_max: bool,
}

/// `2, 4, 8, ...` below `n_max`, then `n_max` itself.
pub fn schedule(n_max: u32) -> Vec<u32> {
    let mut ns: Vec<u32> = std::iter::successors(Some(2u32), |&n| n.checked_mul(2))
        .take_while(|&n| n < n_max)
        .collect();
    ns.push(n_max);
    ns
}

pub fn run(n_max: u32, method: MethodTag) -> Result<BenchReport, CliError> {
    if !BENCH_METHODS.contains(&method) {
        return Err(CliError::Usage(format!(
            "method {method} cannot be benchmarked (use recursive, wachs or coeff-recurrence)"
        )));
    }
    if n_max < 2 {
        return Err(CliError::Usage(format!(
            "--n-max must be at least 2, got {n_max}"
        )));
    }
    let mut rows = Vec::new();
    let mut last: Option<CoeffSeq> = None;
    for n in schedule(n_max) {
        let start = Instant::now();
        let seq = generate(n, method, 0)?;
        rows.push(BenchRow {
            n,
            coefficients: seq.degree(),
            elapsed: start.elapsed(),
        });
        last = Some(seq);
    }
    let last = last.expect("schedule is non-empty");
    let mut agree_at_max = true;
    for other in BENCH_METHODS.into_iter().filter(|&m| m != method) {
        agree_at_max &= generate(n_max, other, 0)? == last;
    }
    Ok(BenchReport {
        method,
        rows,
        agree_at_max,
    })
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "method: {}", self.method)?;
        writeln!(f, "{:>6} {:>12} {:>12}", "n", "coeffs", "time_ms")?;
        for row in &self.rows {
            writeln!(
                f,
                "{:>6} {:>12} {:>12.3}",
                row.n,
                row.coefficients,
                row.elapsed.as_secs_f64() * 1e3
            )?;
        }
        let n_max = self.rows.last().map_or(0, |r| r.n);
        if self.agree_at_max {
            writeln!(f, "all methods agree at n = {n_max}")
        } else {
            writeln!(f, "METHODS DISAGREE at n = {n_max}")
        }
    }
}
