//! Real network snapshots: ingestion, degree-exponent estimation and replay
//! of the high-degree search.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use rand::seq::index::sample;
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::experiments::{fit_power_law_scaling, ScalingFit};
use crate::format::sig6;
use crate::graph::{largest_connected_component, read_edge_list, Graph};
use crate::rng::{derive_seed, rng_from_seed, stream};
use crate::search::{run_search_outcome, SearchOptions, StopCondition, Strategy};

#[derive(Debug, Clone, PartialEq)]
pub struct SnapshotMeta {
    pub source: String,
    pub node_count: usize,
    pub edge_count: usize,
    pub self_loops_dropped: usize,
    pub duplicates_dropped: usize,
    /// Original id of each compacted node.
    pub original_ids: Vec<u64>,
}

impl SnapshotMeta {
    pub fn dropped(&self) -> usize {
        self.self_loops_dropped + self.duplicates_dropped
    }
}

/// Reads an edge-list snapshot. The largest component is not extracted.
pub fn ingest_snapshot<R: BufRead>(source: R, label: &str) -> Result<(Graph, SnapshotMeta)> {
    let load = read_edge_list(source)?;
    let meta = SnapshotMeta {
        source: label.to_string(),
        node_count: load.graph.node_count(),
        edge_count: load.graph.edge_count(),
        self_loops_dropped: load.self_loops_dropped,
        duplicates_dropped: load.duplicates_dropped,
        original_ids: load.original_ids,
    };
    Ok((load.graph, meta))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentEstimate {
    pub tau_hat: f64,
    pub fit: ScalingFit,
    pub k_min: usize,
    pub k_max: usize,
}

/// Fits `ln count = a - tau ln k` over the non-empty histogram bins in
/// `[k_min, k_max]`. With `k_max = None` the window ends at the largest degree
/// that occurs at least twice.
pub fn estimate_exponent_from_histogram(
    histogram: &BTreeMap<usize, usize>,
    k_min: usize,
    k_max: Option<usize>,
) -> Result<ExponentEstimate> {
    const MIN_BINS: usize = 3;
    if k_min == 0 {
        return Err(Error::invalid("k_min", "must be at least 1"));
    }
    let k_max = match k_max {
        Some(k) => k,
        None => histogram
            .iter()
            .rev()
            .find(|&(_, &count)| count >= 2)
            .map(|(&k, _)| k)
            .unwrap_or(0),
    };
    let points: Vec<(f64, f64)> = histogram
        .range(k_min..=k_max.max(k_min))
        .filter(|&(&k, &count)| k <= k_max && count > 0)
        .map(|(&k, &count)| (k as f64, count as f64))
        .collect();
    if points.len() < MIN_BINS {
        return Err(Error::TooFewBins {
            needed: MIN_BINS,
            found: points.len(),
        });
    }
    let fit = fit_power_law_scaling(&points)?;
    Ok(ExponentEstimate {
        tau_hat: -fit.exponent,
        fit,
        k_min,
        k_max,
    })
}

pub fn estimate_exponent(g: &Graph, k_min: usize, k_max: Option<usize>) -> Result<ExponentEstimate> {
    let mut hist = g.degree_histogram();
    hist.remove(&0);
    estimate_exponent_from_histogram(&hist, k_min, k_max)
}

/// Fraction of searches that found their target within each step count.
#[derive(Debug, Clone, PartialEq)]
pub struct FoundCurve {
    /// `cumulative_fraction[s]`: share of trials finished in `<= s` steps.
    pub cumulative_fraction: Vec<f64>,
    pub trials: usize,
    pub censored: usize,
    /// Steps per trial, `None` when the step cap was hit.
    pub steps: Vec<Option<usize>>,
}

impl FoundCurve {
    /// Smallest step count by which at least half the trials succeeded.
    pub fn median_steps(&self) -> Option<usize> {
        self.cumulative_fraction.iter().position(|&f| f >= 0.5)
    }

    pub fn write_csv<W: Write>(&self, mut sink: W) -> Result<()> {
        writeln!(sink, "steps,cumulative_fraction")?;
        for (s, f) in self.cumulative_fraction.iter().enumerate() {
            writeln!(sink, "{},{}", s, sig6(*f))?;
        }
        Ok(())
    }
}

/// High-degree search between random source/target pairs of the largest
/// component. Each trial places the file on `replicas` distinct nodes other
/// than the source; the search stops when any replica is seen.
pub fn cumulative_found_experiment(
    g: &Graph,
    trials: usize,
    replicas: usize,
    opts: &SearchOptions,
    seed: u64,
) -> Result<FoundCurve> {
    if trials == 0 {
        return Err(Error::invalid("trials", "must be at least 1"));
    }
    if replicas == 0 {
        return Err(Error::invalid("replicas", "must be at least 1"));
    }
    let lcc = largest_connected_component(g).graph;
    let n = lcc.node_count();
    if n < 2 {
        return Err(Error::invalid("graph", "largest component needs at least 2 nodes"));
    }
    if replicas > n - 1 {
        return Err(Error::invalid("replicas", format!("at most {} replicas fit", n - 1)));
    }
    let steps: Vec<Result<Option<usize>>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let trial_seed = derive_seed(seed, stream::TRIAL, trial as u64);
            let mut rng = rng_from_seed(derive_seed(trial_seed, stream::ENDPOINTS, 0));
            let source = rng.gen_range(0..n);
            let targets: Vec<usize> = sample(&mut rng, n - 1, replicas)
                .into_iter()
                .map(|t| if t >= source { t + 1 } else { t })
                .collect();
            let walk_seed = derive_seed(trial_seed, stream::WALK, 0);
            let outcome = run_search_outcome(
                &lcc,
                source,
                Strategy::HighDegreeSelfAvoiding,
                &StopCondition::AnyTargetFound(targets),
                opts,
                walk_seed,
            )?;
            Ok(outcome.success_step())
        })
        .collect();
    let steps: Vec<Option<usize>> = steps.into_iter().collect::<Result<_>>()?;
    let censored = steps.iter().filter(|s| s.is_none()).count();
    if censored > 0 {
        log::warn!("{censored} of {trials} snapshot searches hit the step cap");
    }
    let longest = steps.iter().flatten().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; longest + 1];
    for s in steps.iter().flatten() {
        counts[*s] += 1;
    }
    let mut acc = 0;
    let cumulative_fraction = counts
        .iter()
        .map(|c| {
            acc += c;
            acc as f64 / trials as f64
        })
        .collect();
    Ok(FoundCurve {
        cumulative_fraction,
        trials,
        censored,
        steps,
    })
}

/// `meta.txt`: counts, fitted exponent and fit quality.
pub fn write_meta<W: Write>(meta: &SnapshotMeta, estimate: Option<&ExponentEstimate>, mut sink: W) -> Result<()> {
    writeln!(sink, "source: {}", meta.source)?;
    writeln!(sink, "nodes: {}", meta.node_count)?;
    writeln!(sink, "edges: {}", meta.edge_count)?;
    writeln!(sink, "self_loops_dropped: {}", meta.self_loops_dropped)?;
    writeln!(sink, "duplicates_dropped: {}", meta.duplicates_dropped)?;
    match estimate {
        Some(e) => {
            writeln!(sink, "tau_hat: {}", sig6(e.tau_hat))?;
            writeln!(sink, "fit_r2: {}", sig6(e.fit.r_squared))?;
            writeln!(sink, "fit_window: {}..={}", e.k_min, e.k_max)?;
        }
        None => writeln!(sink, "tau_hat: none")?,
    }
    Ok(())
}
