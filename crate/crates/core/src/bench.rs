//! Wall-time scaling of the counting pipeline.

use std::time::Instant;

use crate::error::Result;
use crate::pipeline::{run, PairSearch, PipelineOptions};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub p: u64,
    pub h: u64,
    pub seconds: f64,
}

/// Least-squares slope of `ln t` against `ln p`. `None` with fewer than two
/// distinct primes or a non-positive time.
pub fn loglog_slope(rows: &[BenchRow]) -> Option<f64> {
    if rows.iter().any(|r| r.seconds <= 0.0) {
        return None;
    }
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| ((r.p as f64).ln(), r.seconds.ln()))
        .collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|q| q.0).sum::<f64>() / n;
    let my = pts.iter().map(|q| q.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|q| (q.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|q| (q.0 - mx) * (q.1 - my)).sum();
    (pts.len() >= 2 && sxx > 0.0).then(|| sxy / sxx)
}

/// Best of `repeats` runs of the congruence pipeline at `p`.
pub fn time_algorithm3(p: u64, opts: &PipelineOptions, repeats: u32) -> Result<BenchRow> {
    let mut best = f64::INFINITY;
    let mut h = 0;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        h = run(p, PairSearch::Congruence, opts)?.0.h;
        best = best.min(start.elapsed().as_secs_f64());
    }
    Ok(BenchRow {
        p,
        h,
        seconds: best,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(p: u64, seconds: f64) -> BenchRow {
        BenchRow { p, h: 0, seconds }
    }

    #[test]
    fn slope_of_power_law() {
        let rows: Vec<_> = [1e7, 1e8, 1e9, 1e10]
            .iter()
            .map(|&p: &f64| row(p as u64, 3e-6 * p.powf(0.75)))
            .collect();
        assert!((loglog_slope(&rows).unwrap() - 0.75).abs() < 1e-9);
    }

    #[test]
    fn slope_needs_two_points() {
        assert_eq!(loglog_slope(&[row(7, 1.0)]), None);
        assert_eq!(loglog_slope(&[row(7, 1.0), row(7, 2.0)]), None);
        assert_eq!(loglog_slope(&[row(7, 0.0), row(11, 2.0)]), None);
    }

    #[test]
    fn timing_reports_h() {
        let r = time_algorithm3(29, &PipelineOptions::default(), 2).unwrap();
        assert_eq!(r.h, 6);
        assert!(r.seconds >= 0.0);
    }
}
