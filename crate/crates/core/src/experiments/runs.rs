//! Single-graph experiments: step distributions, paired strategy runs and
//! revisit curves.

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::rng::{derive_seed, rng_from_seed, stream};
use crate::search::{
    revisit_fraction_curve, run_search, run_search_observed, SearchOptions, SearchTrace, StopCondition, Strategy,
};

fn trial_source(g: &Graph, seed: u64, trial: usize) -> (NodeId, u64) {
    let trial_seed = derive_seed(seed, stream::TRIAL, trial as u64);
    let mut rng = rng_from_seed(derive_seed(trial_seed, stream::ENDPOINTS, 0));
    (
        rng.gen_range(0..g.node_count()),
        derive_seed(trial_seed, stream::WALK, 0),
    )
}

fn require_nodes(g: &Graph) -> Result<()> {
    if g.is_empty() {
        Err(Error::invalid("graph", "needs at least one node"))
    } else {
        Ok(())
    }
}

/// How many new nodes each step reveals, averaged over full-coverage runs.
#[derive(Debug, Clone, PartialEq)]
pub struct StepDistribution {
    pub node_count: usize,
    pub trials: usize,
    /// Mean number of nodes first seen at each step.
    pub mean_new_seen: Vec<f64>,
    /// Running total of `mean_new_seen`, divided by the node count.
    pub cumulative_fraction: Vec<f64>,
    /// Steps to full coverage per trial; `None` if the cap was hit.
    pub completion_steps: Vec<Option<usize>>,
}

impl StepDistribution {
    /// First step at which the cumulative fraction reaches `fraction`.
    pub fn step_reaching(&self, fraction: f64) -> Option<usize> {
        self.cumulative_fraction.iter().position(|&c| c >= fraction - 1e-12)
    }

    pub fn cumulative_at(&self, step: usize) -> f64 {
        match self.cumulative_fraction.get(step) {
            Some(&c) => c,
            None => self.cumulative_fraction.last().copied().unwrap_or(0.0),
        }
    }
}

pub fn step_distribution(
    g: &Graph,
    strategy: Strategy,
    trials: usize,
    opts: &SearchOptions,
    seed: u64,
) -> Result<StepDistribution> {
    require_nodes(g)?;
    if trials == 0 {
        return Err(Error::invalid("trials", "must be at least 1"));
    }
    let runs: Vec<Result<(Vec<(usize, usize)>, Option<usize>)>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let (source, walk_seed) = trial_source(g, seed, trial);
            // Only steps that reveal something are kept: at most N entries.
            let mut gains = Vec::new();
            let mut last = 0;
            let mut step = 0;
            let outcome = run_search_observed(
                g,
                source,
                strategy,
                &StopCondition::CoverageReached(1.0),
                opts,
                walk_seed,
                |r| {
                    if r.seen_count_after > last {
                        gains.push((step, r.seen_count_after - last));
                        last = r.seen_count_after;
                    }
                    step += 1;
                },
            )?;
            Ok((gains, outcome.success_step()))
        })
        .collect();
    let mut totals: Vec<f64> = Vec::new();
    let mut completion_steps = Vec::with_capacity(trials);
    for run in runs {
        let (gains, done) = run?;
        for (step, gain) in gains {
            if totals.len() <= step {
                totals.resize(step + 1, 0.0);
            }
            totals[step] += gain as f64;
        }
        completion_steps.push(done);
    }
    let mean_new_seen: Vec<f64> = totals.iter().map(|t| t / trials as f64).collect();
    let n = g.node_count() as f64;
    let mut acc = 0.0;
    let cumulative_fraction = mean_new_seen
        .iter()
        .map(|m| {
            acc += m;
            acc / n
        })
        .collect();
    Ok(StepDistribution {
        node_count: g.node_count(),
        trials,
        mean_new_seen,
        cumulative_fraction,
        completion_steps,
    })
}

/// Two strategies run to full coverage from the same source with the same seed.
#[derive(Debug, Clone, PartialEq)]
pub struct StrategyComparison {
    pub first: SearchTrace,
    pub second: SearchTrace,
    /// Steps of `first` divided by steps of `second`; `None` if either hit the cap.
    pub ratio: Option<f64>,
    pub step_limit_hit: bool,
}

pub fn compare_strategies(
    g: &Graph,
    first: Strategy,
    second: Strategy,
    opts: &SearchOptions,
    seed: u64,
) -> Result<StrategyComparison> {
    require_nodes(g)?;
    let (source, walk_seed) = trial_source(g, seed, 0);
    let stop = StopCondition::CoverageReached(1.0);
    let a = run_search(g, source, first, &stop, opts, walk_seed)?;
    let b = run_search(g, source, second, &stop, opts, walk_seed)?;
    let ratio = match (a.outcome.success_step(), b.outcome.success_step()) {
        (Some(0), Some(0)) => Some(1.0),
        (Some(x), Some(y)) => Some(x as f64 / y as f64),
        _ => None,
    };
    if ratio.is_none() {
        log::warn!("strategy comparison hit the step cap");
    }
    Ok(StrategyComparison {
        step_limit_hit: ratio.is_none(),
        first: a,
        second: b,
        ratio,
    })
}

/// Random walk versus high-degree search, both to full coverage.
pub fn strategy_comparison(g: &Graph, opts: &SearchOptions, seed: u64) -> Result<StrategyComparison> {
    compare_strategies(
        g,
        Strategy::RandomWalkNoBacktrack,
        Strategy::HighDegreeSelfAvoiding,
        opts,
        seed,
    )
}

/// Revisit curve of one walk run until `upto` of the nodes have been visited.
pub fn revisit_run(
    g: &Graph,
    strategy: Strategy,
    upto: f64,
    bucket: f64,
    opts: &SearchOptions,
    seed: u64,
) -> Result<Vec<(f64, f64)>> {
    require_nodes(g)?;
    let (source, walk_seed) = trial_source(g, seed, 0);
    let trace = run_search(
        g,
        source,
        strategy,
        &StopCondition::VisitedReached(upto),
        opts,
        walk_seed,
    )?;
    revisit_fraction_curve(&trace, bucket)
}

/// Pointwise mean of several revisit curves over the buckets they share.
pub fn average_curves(curves: &[Vec<(f64, f64)>]) -> Vec<(f64, f64)> {
    let mut sums: Vec<(f64, f64, usize)> = Vec::new();
    for curve in curves {
        for (i, &(edge, f)) in curve.iter().enumerate() {
            if sums.len() <= i {
                sums.push((edge, 0.0, 0));
            }
            sums[i].1 += f;
            sums[i].2 += 1;
        }
    }
    sums.into_iter()
        .filter(|s| s.2 == curves.len())
        .map(|(edge, total, count)| (edge, total / count as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::{largest_connected_component, power_law_graph};

    #[test]
    fn star_mass_at_step_zero() {
        let g = star(12);
        let d = step_distribution(&g, Strategy::HighDegreeSelfAvoiding, 5, &SearchOptions::default(), 1).unwrap();
        assert_eq!(d.mean_new_seen, vec![13.0]);
        assert_eq!(d.cumulative_fraction, vec![1.0]);
        assert!(d.completion_steps.iter().all(|&c| c == Some(0)));
    }

    #[test]
    fn cumulative_reaches_one() {
        let g = largest_connected_component(&power_law_graph(600, 2.1, Default::default(), 8).unwrap()).graph;
        let d = step_distribution(&g, Strategy::RandomWalkNoBacktrack, 4, &SearchOptions::default(), 2).unwrap();
        assert!((d.cumulative_fraction.last().unwrap() - 1.0).abs() < 1e-9);
        assert!(d.cumulative_fraction.windows(2).all(|w| w[0] <= w[1]));
        assert!(d.step_reaching(0.5).unwrap() <= d.step_reaching(0.9).unwrap());
    }

    #[test]
    fn same_strategy_ratio_is_one() {
        let g = largest_connected_component(&power_law_graph(500, 2.1, Default::default(), 3).unwrap()).graph;
        let opts = SearchOptions::default();
        for s in [Strategy::RandomWalkNoBacktrack, Strategy::HighDegreeSelfAvoiding] {
            let c = compare_strategies(&g, s, s, &opts, 9).unwrap();
            assert_eq!(c.ratio, Some(1.0));
            assert_eq!(c.first, c.second);
        }
    }

    #[test]
    fn curve_average() {
        let a = vec![(0.0, 0.2), (0.5, 0.6)];
        let b = vec![(0.0, 0.4), (0.5, 0.8), (1.0, 1.0)];
        let avg = average_curves(&[a, b]);
        assert_eq!(avg.len(), 2);
        assert!((avg[0].1 - 0.3).abs() < 1e-12);
        assert!((avg[1].1 - 0.7).abs() < 1e-12);
    }
}
