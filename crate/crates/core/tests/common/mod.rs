//! Independent reference computations shared by the integration suites.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use plsearch::search::{NodeColor, SearchTrace};
use plsearch::Graph;

/// Nodes within `radius` hops of `source`, by plain breadth-first search.
pub fn bfs_ball(g: &Graph, source: usize, radius: usize) -> BTreeSet<usize> {
    let mut dist = vec![usize::MAX; g.node_count()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    let mut ball = BTreeSet::new();
    while let Some(v) = queue.pop_front() {
        ball.insert(v);
        if dist[v] == radius {
            continue;
        }
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    ball
}

/// Messages sent by a TTL flood: every node closer than `ttl` forwards to all
/// of its neighbours.
pub fn flood_messages(g: &Graph, source: usize, ttl: usize) -> usize {
    if ttl == 0 {
        return 0;
    }
    bfs_ball(g, source, ttl - 1).iter().map(|&v| g.degree(v)).sum()
}

/// Adjacency is symmetric, loop-free, duplicate-free and the edge count agrees.
pub fn check_simple(g: &Graph) -> Result<(), String> {
    let mut ends = 0;
    for v in 0..g.node_count() {
        let ns = g.neighbors(v);
        ends += ns.len();
        let unique: BTreeSet<_> = ns.iter().collect();
        if unique.len() != ns.len() {
            return Err(format!("node {v} has a repeated neighbour"));
        }
        for &w in ns {
            if w == v {
                return Err(format!("self-loop at {v}"));
            }
            if !g.neighbors(w).contains(&v) {
                return Err(format!("edge {v}-{w} is not symmetric"));
            }
        }
    }
    if ends != 2 * g.edge_count() {
        return Err(format!("{ends} edge ends for {} edges", g.edge_count()));
    }
    Ok(())
}

/// Replays a trace against the graph and checks every recorded quantity:
/// adjacency of consecutive holders, revisit flags, arrival colours
/// recomputed from the visited set, monotone colour transitions, and the seen
/// count recomputed as the union of distance-`radius` balls around holders.
pub fn check_trace(g: &Graph, trace: &SearchTrace, radius: usize) -> Result<(), String> {
    let n = g.node_count();
    let mut visited = vec![false; n];
    let mut seen = BTreeSet::new();
    let mut last_color: Vec<Option<NodeColor>> = vec![None; n];
    let rank = |c: NodeColor| match c {
        NodeColor::White => 0,
        NodeColor::Gray => 1,
        NodeColor::Black => 2,
    };
    let mut previous_seen = 0;
    for (i, step) in trace.steps.iter().enumerate() {
        let v = step.holder;
        if i > 0 && !g.has_edge(trace.steps[i - 1].holder, v) {
            return Err(format!("step {i}: holder {v} not adjacent to previous holder"));
        }
        if step.was_revisit != visited[v] {
            return Err(format!("step {i}: revisit flag wrong for {v}"));
        }
        let expected = if !visited[v] {
            NodeColor::White
        } else if g.neighbors(v).iter().all(|&w| visited[w]) {
            NodeColor::Black
        } else {
            NodeColor::Gray
        };
        if step.color_at_arrival != expected {
            return Err(format!(
                "step {i}: colour {:?}, expected {expected:?}",
                step.color_at_arrival
            ));
        }
        if let Some(prev) = last_color[v] {
            if rank(expected) < rank(prev) {
                return Err(format!("step {i}: node {v} went from {prev:?} to {expected:?}"));
            }
        }
        last_color[v] = Some(expected);
        visited[v] = true;
        seen.extend(bfs_ball(g, v, radius));
        if step.seen_count_after != seen.len() {
            return Err(format!(
                "step {i}: seen count {} but recomputed {}",
                step.seen_count_after,
                seen.len()
            ));
        }
        if step.seen_count_after < previous_seen || step.seen_count_after > n {
            return Err(format!("step {i}: seen count out of order"));
        }
        previous_seen = step.seen_count_after;
    }
    Ok(())
}
