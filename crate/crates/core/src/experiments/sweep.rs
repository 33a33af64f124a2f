//! Multi-size, multi-trial sweeps with a log-log fit over the per-size means.

use rand::Rng;
use rayon::prelude::*;

use super::fit::{fit_power_law_scaling, ScalingFit};
use crate::error::{Error, Result};
use crate::graph::{
    generate_gnm_graph, generate_gnp_graph, largest_connected_component, power_law_graph, CutoffRule, Graph,
};
use crate::rng::{derive_seed, rng_from_seed, stream};
use crate::search::{run_search_observed, run_search_outcome, SearchOptions, SearchOutcome, StopCondition, Strategy};

/// Sizes with a largest component smaller than this are skipped.
pub const MIN_LCC_NODES: usize = 10;
/// Fraction of step-capped trials above which a sweep is flagged.
pub const MAX_CENSORED_FRACTION: f64 = 0.2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphKind {
    /// Configuration model with `p_k ~ k^-tau` and cutoff.
    PowerLaw,
    /// Uniform random graph with the node and edge count of a power-law twin.
    PoissonMatched,
    /// Erdős–Rényi with fixed mean degree `z`.
    PoissonConstantZ(f64),
}

impl GraphKind {
    pub fn name(&self) -> String {
        match self {
            GraphKind::PowerLaw => "power-law".into(),
            GraphKind::PoissonMatched => "poisson-matched".into(),
            GraphKind::PoissonConstantZ(z) => format!("poisson-z{}", crate::format::sig6(*z)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    /// Steps until a random target enters the seen set, averaged over every
    /// possible target of each walk (see [`mean_discovery_step`]).
    AvgSearchSteps,
    /// Steps until half the graph has been seen.
    HalfCoverSteps,
}

impl Metric {
    pub fn name(&self) -> &'static str {
        match self {
            Metric::AvgSearchSteps => "avg-search",
            Metric::HalfCoverSteps => "half-cover",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub sizes: Vec<usize>,
    pub tau: f64,
    pub graph_kind: GraphKind,
    pub strategy: Strategy,
    pub metric: Metric,
    pub trials: usize,
    pub seed: u64,
    /// Generate a new graph for every trial (default) or one per size.
    pub fresh_graph_per_trial: bool,
    pub cutoff_rule: CutoffRule,
    pub search: SearchOptions,
}

impl SweepConfig {
    pub fn new(sizes: Vec<usize>, tau: f64, graph_kind: GraphKind, strategy: Strategy, metric: Metric) -> Self {
        SweepConfig {
            sizes,
            tau,
            graph_kind,
            strategy,
            metric,
            trials: 50,
            seed: crate::experiments::DEFAULT_SEED,
            fresh_graph_per_trial: true,
            cutoff_rule: CutoffRule::RootN,
            search: SearchOptions::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.sizes.len() < 2 {
            return Err(Error::invalid("sizes", "need at least 2 distinct sizes"));
        }
        if self.sizes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid("sizes", "must be strictly increasing"));
        }
        if self.sizes[0] < 2 {
            return Err(Error::invalid("sizes", "every size must be at least 2"));
        }
        if self.trials == 0 {
            return Err(Error::invalid("trials", "must be at least 1"));
        }
        if !(self.tau.is_finite() && self.tau > 1.0) {
            return Err(Error::invalid(
                "tau",
                format!("must be a finite exponent > 1, got {}", self.tau),
            ));
        }
        if let GraphKind::PoissonConstantZ(z) = self.graph_kind {
            if !(z > 0.0 && z <= (self.sizes[0] - 1) as f64) {
                return Err(Error::invalid(
                    "z",
                    format!("mean degree {z} out of range for size {}", self.sizes[0]),
                ));
            }
        }
        if matches!(self.strategy, Strategy::Flood { .. }) {
            return Err(Error::invalid("strategy", "sweeps run walk strategies only"));
        }
        Ok(())
    }
}

/// One generated graph, reduced to its largest component.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Graph,
    pub generated_nodes: usize,
    pub generated_edges: usize,
    /// For matched Poisson graphs: node and edge count of the power-law twin.
    pub twin: Option<(usize, usize)>,
}

pub fn build_instance(kind: GraphKind, n: usize, tau: f64, rule: CutoffRule, seed: u64) -> Result<Instance> {
    let (raw, twin) = match kind {
        GraphKind::PowerLaw => (power_law_graph(n, tau, rule, seed)?, None),
        GraphKind::PoissonMatched => {
            let twin = power_law_graph(n, tau, rule, seed)?;
            let edges = twin.edge_count();
            (generate_gnm_graph(n, edges, seed)?, Some((n, edges)))
        }
        GraphKind::PoissonConstantZ(z) => (generate_gnp_graph(n, z / n as f64, seed)?, None),
    };
    let lcc = largest_connected_component(&raw);
    Ok(Instance {
        generated_nodes: raw.node_count(),
        generated_edges: raw.edge_count(),
        graph: lcc.graph,
        twin,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub size: usize,
    pub mean: f64,
    pub std: f64,
    /// Trials that contributed to the mean.
    pub trials: usize,
    /// Trials that hit the step cap.
    pub censored: usize,
    pub mean_lcc_nodes: f64,
    pub mean_lcc_edges: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub config: SweepConfig,
    pub rows: Vec<SweepRow>,
    pub fit: Option<ScalingFit>,
    pub skipped_sizes: Vec<usize>,
    /// More than [`MAX_CENSORED_FRACTION`] of the trials at some size hit the cap.
    pub unreliable: bool,
}

struct TrialOutcome {
    value: Option<f64>,
    lcc_nodes: usize,
    lcc_edges: usize,
}

fn size_seed(master: u64, size: usize) -> u64 {
    derive_seed(master, stream::SIZE, size as u64)
}

/// Mean over all targets `t != source` of the step at which `t` enters the
/// seen set, for one walk run to full coverage.
///
/// This is the expected `TargetFound` step for a uniformly random target,
/// conditioned on the walk. The walk's choices never depend on the target, so
/// every target shares one trajectory. `None` if the step cap stops the walk
/// before the graph is covered.
pub fn mean_discovery_step(
    g: &Graph,
    source: usize,
    strategy: Strategy,
    opts: &SearchOptions,
    seed: u64,
) -> Result<Option<f64>> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::invalid("graph", "need at least two nodes"));
    }
    // The source is seen at step 0 but is not a target.
    let mut previous = 1usize;
    let mut step = 0usize;
    let mut total = 0.0;
    let outcome = run_search_observed(
        g,
        source,
        strategy,
        &StopCondition::CoverageReached(1.0),
        opts,
        seed,
        |r| {
            total += (step * (r.seen_count_after - previous)) as f64;
            previous = r.seen_count_after;
            step += 1;
        },
    )?;
    Ok(match outcome {
        SearchOutcome::Covered { .. } => Some(total / (n - 1) as f64),
        _ => None,
    })
}

fn run_trial(config: &SweepConfig, g: &Graph, trial_seed: u64) -> Result<Option<f64>> {
    let n = g.node_count();
    let mut rng = rng_from_seed(derive_seed(trial_seed, stream::ENDPOINTS, 0));
    let source = rng.gen_range(0..n);
    let walk_seed = derive_seed(trial_seed, stream::WALK, 0);
    match config.metric {
        Metric::HalfCoverSteps => {
            let stop = StopCondition::CoverageReached(0.5);
            let outcome = run_search_outcome(g, source, config.strategy, &stop, &config.search, walk_seed)?;
            Ok(outcome.success_step().map(|s| s as f64))
        }
        Metric::AvgSearchSteps => mean_discovery_step(g, source, config.strategy, &config.search, walk_seed),
    }
}

fn mean_std(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = if values.len() > 1 {
        values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)
    } else {
        0.0
    };
    (mean, var.sqrt())
}

/// Runs every size and trial, then fits `mean ~ size^exponent`.
///
/// Trials are evaluated in parallel on the current rayon pool but gathered by
/// trial index, so the result does not depend on the worker count.
pub fn run_scaling_sweep(config: &SweepConfig) -> Result<SweepResult> {
    config.validate()?;
    let mut rows = Vec::new();
    let mut skipped_sizes = Vec::new();
    let mut unreliable = false;

    for &size in &config.sizes {
        let base = size_seed(config.seed, size);
        let shared = if config.fresh_graph_per_trial {
            None
        } else {
            Some(build_instance(
                config.graph_kind,
                size,
                config.tau,
                config.cutoff_rule,
                base,
            )?)
        };
        let outcomes: Vec<Result<Option<TrialOutcome>>> = (0..config.trials)
            .into_par_iter()
            .map(|trial| {
                let trial_seed = derive_seed(base, stream::TRIAL, trial as u64);
                let fresh;
                let instance = match &shared {
                    Some(inst) => inst,
                    None => {
                        fresh = build_instance(config.graph_kind, size, config.tau, config.cutoff_rule, trial_seed)?;
                        &fresh
                    }
                };
                let g = &instance.graph;
                if g.node_count() < MIN_LCC_NODES {
                    return Ok(None);
                }
                Ok(Some(TrialOutcome {
                    value: run_trial(config, g, trial_seed)?,
                    lcc_nodes: g.node_count(),
                    lcc_edges: g.edge_count(),
                }))
            })
            .collect();
        let mut trials = Vec::with_capacity(outcomes.len());
        for o in outcomes {
            trials.push(o?);
        }
        if trials.iter().any(Option::is_none) {
            log::warn!("size {size}: largest component below {MIN_LCC_NODES} nodes, size skipped");
            skipped_sizes.push(size);
            continue;
        }
        let trials: Vec<TrialOutcome> = trials.into_iter().flatten().collect();
        let values: Vec<f64> = trials.iter().filter_map(|t| t.value).collect();
        let censored = trials.len() - values.len();
        if censored as f64 > MAX_CENSORED_FRACTION * trials.len() as f64 {
            log::warn!("size {size}: {censored} of {} trials hit the step cap", trials.len());
            unreliable = true;
        }
        let (mean, std) = mean_std(&values);
        let count = trials.len() as f64;
        rows.push(SweepRow {
            size,
            mean,
            std,
            trials: values.len(),
            censored,
            mean_lcc_nodes: trials.iter().map(|t| t.lcc_nodes as f64).sum::<f64>() / count,
            mean_lcc_edges: trials.iter().map(|t| t.lcc_edges as f64).sum::<f64>() / count,
        });
    }

    let points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.mean > 0.0 && r.mean.is_finite())
        .map(|r| (r.size as f64, r.mean))
        .collect();
    let fit = if points.len() >= 2 {
        Some(fit_power_law_scaling(&points)?)
    } else {
        log::warn!("fewer than two usable sizes; no scaling fit");
        None
    };
    Ok(SweepResult {
        config: config.clone(),
        rows,
        fit,
        skipped_sizes,
        unreliable,
    })
}

/// [`run_scaling_sweep`] with the metric forced to average search steps.
pub fn avg_search_sweep(config: &SweepConfig) -> Result<SweepResult> {
    let mut config = config.clone();
    config.metric = Metric::AvgSearchSteps;
    run_scaling_sweep(&config)
}
