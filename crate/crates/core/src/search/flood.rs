use std::collections::VecDeque;

use crate::error::Result;
use crate::graph::{Graph, NodeId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FloodResult {
    /// Nodes within `ttl` hops of the source, ascending.
    pub reached: Vec<NodeId>,
    /// Total query transmissions: every node closer than `ttl` forwards to
    /// all of its neighbours, duplicates included.
    pub message_count: usize,
}

/// TTL-limited broadcast from `source`.
pub fn flood_search(g: &Graph, source: NodeId, ttl: usize) -> Result<FloodResult> {
    g.check_node(source)?;
    let mut dist = vec![usize::MAX; g.node_count()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    let mut reached = vec![source];
    let mut message_count = 0;
    while let Some(u) = queue.pop_front() {
        if dist[u] >= ttl {
            continue;
        }
        message_count += g.degree(u);
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                reached.push(w);
                queue.push_back(w);
            }
        }
    }
    reached.sort_unstable();
    Ok(FloodResult { reached, message_count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn ttl_zero() {
        let r = flood_search(&path(4), 2, 0).unwrap();
        assert_eq!(r.reached, vec![2]);
        assert_eq!(r.message_count, 0);
    }

    #[test]
    fn star_centre_one_hop() {
        let r = flood_search(&star(6), 0, 1).unwrap();
        assert_eq!(r.reached.len(), 7);
        assert_eq!(r.message_count, 6);
    }

    #[test]
    fn path_two_hops() {
        let r = flood_search(&path(3), 0, 2).unwrap();
        assert_eq!(r.reached, vec![0, 1, 2]);
        assert_eq!(r.message_count, 3);
    }

    #[test]
    fn invalid_source() {
        assert!(flood_search(&path(3), 3, 1).is_err());
    }
}
