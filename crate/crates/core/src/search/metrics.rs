//! Measurements over recorded traces.

use std::io::Write;

use super::{NodeColor, SearchTrace};
use crate::error::{Error, Result};

/// First step whose seen count reaches `fraction * node_count`.
pub fn cover_time(trace: &SearchTrace, fraction: f64) -> Option<usize> {
    let needed = fraction * trace.node_count as f64;
    trace.steps.iter().position(|s| s.seen_count_after as f64 >= needed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ColorCounts {
    pub white: usize,
    pub gray: usize,
    pub black: usize,
}

impl ColorCounts {
    pub fn total(&self) -> usize {
        self.white + self.gray + self.black
    }
}

/// Arrival colours counted in consecutive windows of `window` steps.
pub fn color_histogram(trace: &SearchTrace, window: usize) -> Result<Vec<ColorCounts>> {
    if window == 0 {
        return Err(Error::invalid("window", "must be positive"));
    }
    Ok(trace
        .steps
        .chunks(window)
        .map(|chunk| {
            let mut c = ColorCounts::default();
            for s in chunk {
                match s.color_at_arrival {
                    NodeColor::White => c.white += 1,
                    NodeColor::Gray => c.gray += 1,
                    NodeColor::Black => c.black += 1,
                }
            }
            c
        })
        .collect())
}

/// Revisit rate grouped by how much of the graph had been visited.
///
/// Each step is assigned to the bucket `floor(v / (bucket * N))`, where `v` is
/// the number of distinct holders before the arrival. Returns
/// `(bucket lower edge, revisit fraction)` for every non-empty bucket.
pub fn revisit_fraction_curve(trace: &SearchTrace, bucket: f64) -> Result<Vec<(f64, f64)>> {
    if !(bucket > 0.0 && bucket <= 1.0) {
        return Err(Error::invalid(
            "bucket",
            format!("width must lie in (0, 1], got {bucket}"),
        ));
    }
    let n = trace.node_count.max(1) as f64;
    let buckets = (1.0 / bucket).ceil() as usize + 1;
    let mut steps = vec![0usize; buckets];
    let mut revisits = vec![0usize; buckets];
    let mut visited = 0usize;
    for s in &trace.steps {
        let idx = ((visited as f64 / n / bucket + 1e-9).floor() as usize).min(buckets - 1);
        steps[idx] += 1;
        if s.was_revisit {
            revisits[idx] += 1;
        } else {
            visited += 1;
        }
    }
    Ok((0..buckets)
        .filter(|&i| steps[i] > 0)
        .map(|i| (i as f64 * bucket, revisits[i] as f64 / steps[i] as f64))
        .collect())
}

/// Revisit fraction in the bucket containing `visited_fraction`.
pub fn revisit_fraction_at(trace: &SearchTrace, visited_fraction: f64, bucket: f64) -> Result<Option<f64>> {
    let curve = revisit_fraction_curve(trace, bucket)?;
    let idx = (visited_fraction / bucket + 1e-9).floor();
    Ok(curve
        .into_iter()
        .find(|(edge, _)| (edge / bucket).round() == idx)
        .map(|(_, f)| f))
}

/// `(step, holder degree, arrival colour)` for every step.
pub fn visited_degree_sequence(trace: &SearchTrace) -> Vec<(usize, usize, NodeColor)> {
    trace
        .steps
        .iter()
        .enumerate()
        .map(|(i, s)| (i, s.holder_degree, s.color_at_arrival))
        .collect()
}

/// CSV with columns `step,holder,degree,color,seen_count,revisit`, prefixed
/// by `run` when `run_id` is given.
pub fn write_trace_csv<W: Write>(trace: &SearchTrace, run_id: Option<usize>, header: bool, mut sink: W) -> Result<()> {
    if header {
        if run_id.is_some() {
            write!(sink, "run,")?;
        }
        writeln!(sink, "step,holder,degree,color,seen_count,revisit")?;
    }
    for (i, s) in trace.steps.iter().enumerate() {
        if let Some(run) = run_id {
            write!(sink, "{run},")?;
        }
        writeln!(
            sink,
            "{},{},{},{},{},{}",
            i,
            s.holder,
            s.holder_degree,
            s.color_at_arrival.as_str(),
            s.seen_count_after,
            u8::from(s.was_revisit)
        )?;
    }
    Ok(())
}
