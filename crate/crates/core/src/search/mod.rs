//! Message-passing search on a fixed graph.
//!
//! A search moves a single message from holder to holder. On arrival the
//! holder scans its neighbourhood (radius 2 by default, i.e. first and second
//! neighbours); everything scanned joins the *seen* set. The stop condition is
//! checked after each arrival, and step `0` is the arrival at the source.

mod flood;
mod metrics;

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::rng::{rng_from_seed, SimRng};

pub use flood::{flood_search, FloodResult};
pub use metrics::{
    color_histogram, cover_time, revisit_fraction_at, revisit_fraction_curve, visited_degree_sequence, write_trace_csv,
    ColorCounts,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Uniform over neighbours other than the previous holder; backtracks only
    /// when the previous holder is the sole neighbour.
    RandomWalkNoBacktrack,
    /// Highest-degree unvisited neighbour (ties uniform); when every neighbour
    /// has been visited, behaves like [`Strategy::RandomWalkNoBacktrack`].
    HighDegreeSelfAvoiding,
    /// Broadcast to everything within `ttl` hops; see [`flood_search`].
    Flood { ttl: usize },
}

impl Strategy {
    pub fn name(&self) -> &'static str {
        match self {
            Strategy::RandomWalkNoBacktrack => "random-walk",
            Strategy::HighDegreeSelfAvoiding => "high-degree",
            Strategy::Flood { .. } => "flood",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Flood { ttl } => write!(f, "flood(ttl={ttl})"),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeColor {
    /// Not yet visited.
    White,
    /// Visited, at least one neighbour not yet visited.
    Gray,
    /// Visited along with all of its neighbours.
    Black,
}

impl NodeColor {
    pub fn as_str(&self) -> &'static str {
        match self {
            NodeColor::White => "white",
            NodeColor::Gray => "gray",
            NodeColor::Black => "black",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum StopCondition {
    /// The target enters the seen set.
    TargetFound(NodeId),
    /// Any of several replicas enters the seen set.
    AnyTargetFound(Vec<NodeId>),
    /// Seen set reaches `fraction * node_count`.
    CoverageReached(f64),
    /// Distinct holders reach `fraction * node_count`.
    VisitedReached(f64),
    /// Run exactly this many passes.
    StepLimit(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    /// Safety cap on passes; `None` means `100 * N * mean degree`.
    pub step_limit: Option<usize>,
    /// How far a holder can see: 1 (neighbours) or 2 (neighbours of neighbours).
    pub knowledge_radius: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            step_limit: None,
            knowledge_radius: 2,
        }
    }
}

impl SearchOptions {
    pub fn with_step_limit(mut self, limit: usize) -> Self {
        self.step_limit = Some(limit);
        self
    }

    pub fn with_knowledge_radius(mut self, radius: usize) -> Self {
        self.knowledge_radius = radius;
        self
    }
}

/// `100 * N * mean degree`, i.e. `200` passes per edge.
pub fn default_step_limit(g: &Graph) -> usize {
    (200 * g.edge_count()).max(100)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepRecord {
    pub holder: NodeId,
    pub holder_degree: usize,
    pub color_at_arrival: NodeColor,
    pub seen_count_after: usize,
    pub was_revisit: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchOutcome {
    Found { step: usize },
    Covered { step: usize },
    StepLimitHit { step: usize },
}

impl SearchOutcome {
    pub fn step(&self) -> usize {
        match *self {
            SearchOutcome::Found { step } | SearchOutcome::Covered { step } | SearchOutcome::StepLimitHit { step } => {
                step
            }
        }
    }

    /// Steps to success, `None` when the cap was hit first.
    pub fn success_step(&self) -> Option<usize> {
        match *self {
            SearchOutcome::StepLimitHit { .. } => None,
            other => Some(other.step()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchTrace {
    pub source: NodeId,
    pub node_count: usize,
    pub strategy: Strategy,
    pub seed: u64,
    pub steps: Vec<StepRecord>,
    pub outcome: SearchOutcome,
}

impl SearchTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Mutable per-run state: visit marks, unvisited-neighbour counters for
/// colouring, and the seen set.
struct Walk<'g> {
    g: &'g Graph,
    radius: usize,
    visited: Vec<bool>,
    unvisited_neighbors: Vec<usize>,
    seen: Vec<bool>,
    seen_count: usize,
    distinct_visited: usize,
}

impl<'g> Walk<'g> {
    fn new(g: &'g Graph, radius: usize) -> Self {
        Walk {
            g,
            radius,
            visited: vec![false; g.node_count()],
            unvisited_neighbors: g.degrees().collect(),
            seen: vec![false; g.node_count()],
            seen_count: 0,
            distinct_visited: 0,
        }
    }

    fn color(&self, v: NodeId) -> NodeColor {
        if !self.visited[v] {
            NodeColor::White
        } else if self.unvisited_neighbors[v] > 0 {
            NodeColor::Gray
        } else {
            NodeColor::Black
        }
    }

    #[inline]
    fn mark_seen(&mut self, v: NodeId) {
        if !self.seen[v] {
            self.seen[v] = true;
            self.seen_count += 1;
        }
    }

    fn arrive(&mut self, v: NodeId) -> StepRecord {
        let color = self.color(v);
        let was_revisit = self.visited[v];
        if !was_revisit {
            self.visited[v] = true;
            self.distinct_visited += 1;
            let g = self.g;
            for &w in g.neighbors(v) {
                self.unvisited_neighbors[w] -= 1;
            }
            // A revisit scans nothing new, so only first visits scan.
            self.mark_seen(v);
            for &w in g.neighbors(v) {
                self.mark_seen(w);
                if self.radius >= 2 {
                    for &x in g.neighbors(w) {
                        self.mark_seen(x);
                    }
                }
            }
        }
        StepRecord {
            holder: v,
            holder_degree: self.g.degree(v),
            color_at_arrival: color,
            seen_count_after: self.seen_count,
            was_revisit,
        }
    }

    fn satisfied(&self, stop: &StopCondition) -> bool {
        let n = self.g.node_count() as f64;
        match stop {
            StopCondition::TargetFound(t) => self.seen[*t],
            StopCondition::AnyTargetFound(ts) => ts.iter().any(|&t| self.seen[t]),
            StopCondition::CoverageReached(f) => self.seen_count as f64 >= f * n,
            StopCondition::VisitedReached(f) => self.distinct_visited as f64 >= f * n,
            StopCondition::StepLimit(_) => false,
        }
    }
}

/// Picks the next holder. `previous` is the node the message came from.
pub fn choose_next(
    g: &Graph,
    holder: NodeId,
    previous: Option<NodeId>,
    visited: &[bool],
    strategy: Strategy,
    rng: &mut SimRng,
) -> Result<NodeId> {
    let neighbors = g.neighbors(holder);
    if neighbors.is_empty() {
        return Err(Error::invalid("holder", format!("node {holder} has no neighbours")));
    }
    match strategy {
        Strategy::RandomWalkNoBacktrack => Ok(no_backtrack(neighbors, previous, rng)),
        Strategy::HighDegreeSelfAvoiding => {
            let mut best: Option<NodeId> = None;
            let mut best_degree = 0;
            let mut ties = 0u32;
            for &w in neighbors {
                if visited[w] {
                    continue;
                }
                let d = g.degree(w);
                if best.is_none() || d > best_degree {
                    best = Some(w);
                    best_degree = d;
                    ties = 1;
                } else if d == best_degree {
                    // Reservoir sampling over the tied maxima.
                    ties += 1;
                    if rng.gen_range(0..ties) == 0 {
                        best = Some(w);
                    }
                }
            }
            Ok(best.unwrap_or_else(|| no_backtrack(neighbors, previous, rng)))
        }
        Strategy::Flood { .. } => Err(Error::invalid("strategy", "flooding has no single next holder")),
    }
}

fn no_backtrack(neighbors: &[NodeId], previous: Option<NodeId>, rng: &mut SimRng) -> NodeId {
    if neighbors.len() == 1 {
        return neighbors[0];
    }
    match previous.and_then(|p| neighbors.binary_search(&p).ok()) {
        Some(skip) => {
            let i = rng.gen_range(0..neighbors.len() - 1);
            neighbors[if i >= skip { i + 1 } else { i }]
        }
        None => neighbors[rng.gen_range(0..neighbors.len())],
    }
}

fn validate_request(
    g: &Graph,
    source: NodeId,
    strategy: Strategy,
    stop: &StopCondition,
    opts: &SearchOptions,
) -> Result<()> {
    g.check_node(source)?;
    if matches!(strategy, Strategy::Flood { .. }) {
        return Err(Error::invalid("strategy", "use flood_search for flooding"));
    }
    if !(1..=2).contains(&opts.knowledge_radius) {
        return Err(Error::invalid("knowledge_radius", "must be 1 or 2"));
    }
    match stop {
        StopCondition::TargetFound(t) => {
            g.check_node(*t)?;
            if *t == source {
                return Err(Error::invalid("target", "target must differ from the source"));
            }
        }
        StopCondition::AnyTargetFound(ts) => {
            if ts.is_empty() {
                return Err(Error::invalid("targets", "need at least one target"));
            }
            for &t in ts {
                g.check_node(t)?;
            }
        }
        StopCondition::CoverageReached(f) | StopCondition::VisitedReached(f) => {
            if !(*f > 0.0 && *f <= 1.0) {
                return Err(Error::invalid("fraction", format!("must lie in (0, 1], got {f}")));
            }
        }
        StopCondition::StepLimit(max) => {
            if *max == 0 {
                return Err(Error::invalid("step limit", "must be positive"));
            }
        }
    }
    Ok(())
}

fn drive<F: FnMut(StepRecord)>(
    g: &Graph,
    source: NodeId,
    strategy: Strategy,
    stop: &StopCondition,
    opts: &SearchOptions,
    seed: u64,
    mut record: F,
) -> Result<SearchOutcome> {
    validate_request(g, source, strategy, stop, opts)?;
    let mut limit = opts.step_limit.unwrap_or_else(|| default_step_limit(g));
    if let StopCondition::StepLimit(max) = stop {
        limit = limit.min(*max);
    }
    let mut rng = rng_from_seed(seed);
    let mut walk = Walk::new(g, opts.knowledge_radius);
    let mut holder = source;
    let mut previous = None;
    record(walk.arrive(source));
    let success = |step| match stop {
        StopCondition::TargetFound(_) | StopCondition::AnyTargetFound(_) => SearchOutcome::Found { step },
        _ => SearchOutcome::Covered { step },
    };
    if walk.satisfied(stop) {
        return Ok(success(0));
    }
    for step in 1..=limit {
        if g.degree(holder) == 0 {
            // Isolated source: the message can never move.
            return Ok(SearchOutcome::StepLimitHit { step: step - 1 });
        }
        let next = choose_next(g, holder, previous, &walk.visited, strategy, &mut rng)?;
        previous = Some(holder);
        holder = next;
        record(walk.arrive(holder));
        if walk.satisfied(stop) {
            return Ok(success(step));
        }
    }
    Ok(SearchOutcome::StepLimitHit { step: limit })
}

/// Runs one search and records every step.
pub fn run_search(
    g: &Graph,
    source: NodeId,
    strategy: Strategy,
    stop: &StopCondition,
    opts: &SearchOptions,
    seed: u64,
) -> Result<SearchTrace> {
    let mut steps = Vec::new();
    let outcome = drive(g, source, strategy, stop, opts, seed, |r| steps.push(r))?;
    Ok(SearchTrace {
        source,
        node_count: g.node_count(),
        strategy,
        seed,
        steps,
        outcome,
    })
}

/// Same walk as [`run_search`], handing each step record to `observe`
/// instead of storing it.
pub fn run_search_observed<F: FnMut(&StepRecord)>(
    g: &Graph,
    source: NodeId,
    strategy: Strategy,
    stop: &StopCondition,
    opts: &SearchOptions,
    seed: u64,
    mut observe: F,
) -> Result<SearchOutcome> {
    drive(g, source, strategy, stop, opts, seed, |r| observe(&r))
}

/// Same walk as [`run_search`] with the same seed, keeping only the outcome.
pub fn run_search_outcome(
    g: &Graph,
    source: NodeId,
    strategy: Strategy,
    stop: &StopCondition,
    opts: &SearchOptions,
    seed: u64,
) -> Result<SearchOutcome> {
    drive(g, source, strategy, stop, opts, seed, |_| {})
}
