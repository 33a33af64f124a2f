use super::{Graph, NodeId};

/// Disjoint-set forest with path halving and union by size.
struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// Component id per node. Ids are dense and assigned in order of each
/// component's smallest node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    pub labels: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl ComponentLabeling {
    pub fn component_count(&self) -> usize {
        self.sizes.len()
    }

    /// Label of the largest component; ties go to the lower label, i.e. the
    /// component containing the smallest node id.
    pub fn largest(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (label, &size) in self.sizes.iter().enumerate() {
            if best.is_none_or(|b| size > self.sizes[b]) {
                best = Some(label);
            }
        }
        best
    }
}

pub fn connected_components(g: &Graph) -> ComponentLabeling {
    let n = g.node_count();
    let mut sets = DisjointSets::new(n);
    for (u, v) in g.edges() {
        sets.union(u, v);
    }
    let mut root_label = vec![usize::MAX; n];
    let mut labels = vec![0; n];
    let mut sizes = Vec::new();
    for v in 0..n {
        let root = sets.find(v);
        if root_label[root] == usize::MAX {
            root_label[root] = sizes.len();
            sizes.push(0);
        }
        labels[v] = root_label[root];
        sizes[labels[v]] += 1;
    }
    ComponentLabeling { labels, sizes }
}

/// The largest connected component, relabelled densely in ascending order of
/// the original ids.
#[derive(Debug, Clone)]
pub struct LargestComponent {
    pub graph: Graph,
    /// `old_to_new[v]` is `Some(new id)` for members of the component.
    pub old_to_new: Vec<Option<NodeId>>,
    pub new_to_old: Vec<NodeId>,
}

pub fn largest_connected_component(g: &Graph) -> LargestComponent {
    let labeling = connected_components(g);
    let Some(target) = labeling.largest() else {
        return LargestComponent {
            graph: Graph::default(),
            old_to_new: Vec::new(),
            new_to_old: Vec::new(),
        };
    };
    let new_to_old: Vec<NodeId> = (0..g.node_count()).filter(|&v| labeling.labels[v] == target).collect();
    let mut old_to_new = vec![None; g.node_count()];
    for (new, &old) in new_to_old.iter().enumerate() {
        old_to_new[old] = Some(new);
    }
    LargestComponent {
        graph: g.induced_subgraph(&new_to_old),
        old_to_new,
        new_to_old,
    }
}
