//! Immutable undirected simple graphs and their construction.

mod components;
mod edgelist;
mod generate;

use std::collections::BTreeMap;

use crate::error::{Error, Result};

pub use components::{connected_components, largest_connected_component, ComponentLabeling, LargestComponent};
pub use edgelist::{read_edge_list, write_edge_list, EdgeListLoad};
pub use generate::{
    build_configuration_graph, degree_cutoff, degree_cutoff_with, generate_gnm_graph, generate_gnp_graph,
    generate_poisson_graph, power_law_graph, sample_power_law_degrees, CutoffRule, DegreeSequence,
};

pub type NodeId = usize;

/// Undirected simple graph stored as sorted adjacency lists.
///
/// Construction goes through [`Graph::from_edges`], which drops self-loops and
/// duplicate edges, so every `Graph` value is symmetric and simple.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(node_count: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); node_count],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, discarding self-loops and repeated
    /// edges. Panics if an endpoint is `>= node_count`.
    pub fn from_edges<I>(node_count: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut adjacency = vec![Vec::new(); node_count];
        for (u, v) in edges {
            assert!(u < node_count && v < node_count, "edge ({u}, {v}) out of range");
            if u == v {
                continue;
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut half_degrees = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            half_degrees += list.len();
        }
        Graph {
            adjacency,
            edge_count: half_degrees / 2,
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    #[inline]
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    pub fn mean_degree(&self) -> f64 {
        if self.is_empty() {
            0.0
        } else {
            2.0 * self.edge_count as f64 / self.node_count() as f64
        }
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn check_node(&self, v: NodeId) -> Result<()> {
        if v < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: v,
                node_count: self.node_count(),
            })
        }
    }

    /// Subgraph induced by `nodes`, relabelled `0..nodes.len()` in the given order.
    pub fn induced_subgraph(&self, nodes: &[NodeId]) -> Graph {
        let mut new_id = vec![usize::MAX; self.node_count()];
        for (i, &v) in nodes.iter().enumerate() {
            new_id[v] = i;
        }
        let adjacency: Vec<Vec<NodeId>> = nodes
            .iter()
            .map(|&v| {
                let mut list: Vec<NodeId> = self.adjacency[v]
                    .iter()
                    .filter_map(|&w| (new_id[w] != usize::MAX).then_some(new_id[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adjacency, edge_count }
    }

    /// Nodes at distance `1..=radius` from `v`, sorted ascending.
    pub fn neighborhood(&self, v: NodeId, radius: usize) -> Result<Vec<NodeId>> {
        self.check_node(v)?;
        if !(1..=2).contains(&radius) {
            return Err(Error::invalid("radius", format!("must be 1 or 2, got {radius}")));
        }
        let mut out: Vec<NodeId> = self.adjacency[v].clone();
        if radius == 2 {
            for &w in &self.adjacency[v] {
                out.extend(self.adjacency[w].iter().copied().filter(|&x| x != v));
            }
            out.sort_unstable();
            out.dedup();
        }
        Ok(out)
    }

    /// Degree → node count, zero-count degrees omitted.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for d in self.degrees() {
            *hist.entry(d).or_insert(0) += 1;
        }
        hist
    }

    /// Checks symmetry, simplicity, sortedness and edge-count consistency.
    /// Returns a description of the first violation found.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let n = self.node_count();
        let mut half = 0;
        for (u, list) in self.adjacency.iter().enumerate() {
            half += list.len();
            for pair in list.windows(2) {
                if pair[0] >= pair[1] {
                    return Err(format!("adjacency of {u} not strictly ascending"));
                }
            }
            for &v in list {
                if v >= n {
                    return Err(format!("neighbor {v} of {u} out of range"));
                }
                if v == u {
                    return Err(format!("self-loop at {u}"));
                }
                if self.adjacency[v].binary_search(&u).is_err() {
                    return Err(format!("edge {u}->{v} has no reverse"));
                }
            }
        }
        if half != 2 * self.edge_count {
            return Err(format!("edge_count {} but adjacency sums to {half}", self.edge_count));
        }
        Ok(())
    }
}
