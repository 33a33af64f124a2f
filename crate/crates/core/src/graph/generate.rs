use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Graph, NodeId};
use crate::error::{Error, Result};
use crate::rng::{derive_seed, rng_from_seed, stream};

/// How the maximum degree is tied to the node count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CutoffRule {
    /// `m = floor(n^(1/tau))`.
    #[default]
    RootN,
    /// Largest `m` for which the expected number of nodes of degree exactly
    /// `m`, `n * c(m) * m^-tau`, is still at least one.
    UnitExpectedCount,
}

fn check_tau(tau: f64) -> Result<()> {
    if tau.is_finite() && tau > 1.0 {
        Ok(())
    } else {
        Err(Error::invalid(
            "tau",
            format!("must be a finite exponent > 1, got {tau}"),
        ))
    }
}

/// `floor(n^(1/tau))`, at least 1.
pub fn degree_cutoff(n: usize, tau: f64) -> Result<usize> {
    degree_cutoff_with(n, tau, CutoffRule::RootN)
}

pub fn degree_cutoff_with(n: usize, tau: f64, rule: CutoffRule) -> Result<usize> {
    check_tau(tau)?;
    if n == 0 {
        return Err(Error::invalid("n", "node count must be at least 1"));
    }
    let m = match rule {
        CutoffRule::RootN => {
            let root = (n as f64).powf(1.0 / tau);
            // powf can land a hair below an exact integer root (8^(1/3)).
            let nearest = root.round();
            if (root - nearest).abs() <= 1e-9 * root.max(1.0) {
                nearest as usize
            } else {
                root.floor() as usize
            }
        }
        CutoffRule::UnitExpectedCount => {
            let n = n as f64;
            let mut norm = 1.0;
            let mut m = 1usize;
            loop {
                let next = (m + 1) as f64;
                let next_norm = norm + next.powf(-tau);
                if n * next.powf(-tau) / next_norm < 1.0 {
                    break;
                }
                norm = next_norm;
                m += 1;
            }
            m
        }
    };
    Ok(m.max(1))
}

/// Degrees drawn from `p_k = c k^-tau` on `1..=cutoff`, after the parity fix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
    cutoff: usize,
}

impl DegreeSequence {
    /// Wraps explicit degrees; `cutoff` is taken as the largest entry.
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        if degrees.contains(&0) {
            return Err(Error::invalid("degrees", "every degree must be positive"));
        }
        let cutoff = degrees.iter().copied().max().unwrap_or(1);
        Ok(DegreeSequence { degrees, cutoff })
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn total(&self) -> usize {
        self.degrees.iter().sum()
    }
}

/// Draws `n` degrees i.i.d. from `c k^-tau`, `k = 1..=cutoff`, by inverse
/// transform against the exact cumulative table.
///
/// If the sum comes out odd, one uniformly chosen node with degree below the
/// cutoff gets one extra stub. When every node already sits at the cutoff
/// (only possible in degenerate cases such as `cutoff = 1` with odd `n`) the
/// sum stays odd and the builder leaves one stub unpaired.
pub fn sample_power_law_degrees(n: usize, tau: f64, cutoff: usize, seed: u64) -> Result<DegreeSequence> {
    check_tau(tau)?;
    if n == 0 {
        return Err(Error::invalid("n", "node count must be at least 1"));
    }
    if cutoff == 0 {
        return Err(Error::invalid("cutoff", "must be at least 1"));
    }
    let mut cumulative = Vec::with_capacity(cutoff);
    let mut acc = 0.0;
    for k in 1..=cutoff {
        acc += (k as f64).powf(-tau);
        cumulative.push(acc);
    }
    let total = acc;
    let mut rng = rng_from_seed(derive_seed(seed, stream::DEGREES, 0));
    let mut degrees: Vec<usize> = (0..n)
        .map(|_| {
            let u = rng.gen::<f64>() * total;
            // First k whose cumulative weight exceeds u.
            let idx = cumulative.partition_point(|&c| c <= u);
            idx.min(cutoff - 1) + 1
        })
        .collect();

    if degrees.iter().sum::<usize>() % 2 == 1 {
        let below: Vec<usize> = (0..n).filter(|&i| degrees[i] < cutoff).collect();
        if let Some(&i) = below.choose(&mut rng) {
            degrees[i] += 1;
        }
    }
    Ok(DegreeSequence { degrees, cutoff })
}

/// Configuration model: every node gets `degree` stubs, stubs are shuffled and
/// paired in order, and self-loops and repeated edges are discarded.
pub fn build_configuration_graph(seq: &DegreeSequence, seed: u64) -> Result<Graph> {
    if seq.is_empty() {
        return Err(Error::invalid("degree sequence", "must be non-empty"));
    }
    let mut stubs: Vec<NodeId> = Vec::with_capacity(seq.total());
    for (node, &d) in seq.degrees().iter().enumerate() {
        stubs.extend(std::iter::repeat_n(node, d));
    }
    let mut rng = rng_from_seed(derive_seed(seed, stream::WIRING, 0));
    stubs.shuffle(&mut rng);
    let edges = stubs.chunks_exact(2).map(|pair| (pair[0], pair[1]));
    Ok(Graph::from_edges(seq.len(), edges))
}

/// Samples degrees and wires them into a configuration-model graph. The
/// largest component is not extracted.
pub fn power_law_graph(n: usize, tau: f64, rule: CutoffRule, seed: u64) -> Result<Graph> {
    let cutoff = degree_cutoff_with(n, tau, rule)?;
    let seq = sample_power_law_degrees(n, tau, cutoff, seed)?;
    build_configuration_graph(&seq, seed)
}

/// Erdős–Rényi graph with edge probability `z / n`.
pub fn generate_poisson_graph(n: usize, z: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::invalid("n", "a Poisson graph needs at least 2 nodes"));
    }
    if !(z >= 0.0 && z <= (n - 1) as f64) {
        return Err(Error::invalid(
            "z",
            format!("mean degree must lie in [0, {}], got {z}", n - 1),
        ));
    }
    generate_gnp_graph(n, z / n as f64, seed)
}

/// G(n, p) by geometric skipping over the lower-triangular pair index.
pub fn generate_gnp_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(
            "p",
            format!("edge probability must lie in [0, 1], got {p}"),
        ));
    }
    let mut edges = Vec::new();
    if p >= 1.0 {
        for v in 1..n {
            edges.extend((0..v).map(|w| (v, w)));
        }
    } else if p > 0.0 {
        let mut rng = rng_from_seed(derive_seed(seed, stream::POISSON, 0));
        let log_q = (1.0 - p).ln();
        let mut v: usize = 1;
        let mut w: i64 = -1;
        while v < n {
            let r: f64 = 1.0 - rng.gen::<f64>();
            w += 1 + (r.ln() / log_q).floor() as i64;
            while v < n && w >= v as i64 {
                w -= v as i64;
                v += 1;
            }
            if v < n {
                edges.push((v, w as usize));
            }
        }
    }
    Ok(Graph::from_edges(n, edges))
}

/// Uniform random simple graph with exactly `m` edges.
pub fn generate_gnm_graph(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    if m > pairs {
        return Err(Error::invalid(
            "m",
            format!("{m} edges exceed the {pairs} available pairs"),
        ));
    }
    let mut rng = rng_from_seed(derive_seed(seed, stream::POISSON, 1));
    let edges: Vec<(NodeId, NodeId)> = if 2 * m > pairs {
        let mut all: Vec<(NodeId, NodeId)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let (chosen, _) = all.partial_shuffle(&mut rng, m);
        chosen.to_vec()
    } else {
        let mut seen = HashSet::with_capacity(m);
        let mut out = Vec::with_capacity(m);
        while out.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v {
                continue;
            }
            let e = (u.min(v), u.max(v));
            if seen.insert(e) {
                out.push(e);
            }
        }
        out
    };
    Ok(Graph::from_edges(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cutoff_examples() {
        assert_eq!(degree_cutoff(10000, 2.1).unwrap(), 80);
        assert_eq!(degree_cutoff(1, 2.1).unwrap(), 1);
        assert_eq!(degree_cutoff(1024, 2.0).unwrap(), 32);
        assert_eq!(degree_cutoff(8, 3.0).unwrap(), 2);
        assert!(degree_cutoff(100, 1.0).is_err());
        assert!(degree_cutoff(100, 0.5).is_err());
        assert!(degree_cutoff(0, 2.0).is_err());
    }

    #[test]
    fn unit_expected_count_cutoff() {
        // n c m^-tau >= 1 at the returned m and < 1 at m + 1.
        let n = 10000usize;
        let tau = 2.1;
        let m = degree_cutoff_with(n, tau, CutoffRule::UnitExpectedCount).unwrap();
        let norm = |m: usize| (1..=m).map(|k| (k as f64).powf(-tau)).sum::<f64>();
        let expected = |m: usize| n as f64 * (m as f64).powf(-tau) / norm(m);
        assert!(expected(m) >= 1.0);
        assert!(expected(m + 1) < 1.0);
        assert!(m > 1 && m < 200);
    }

    #[test]
    fn unit_cutoff_gives_all_ones() {
        let seq = sample_power_law_degrees(101, 2.5, 1, 3).unwrap();
        assert!(seq.degrees().iter().all(|&d| d == 1));
    }

    #[test]
    fn degrees_respect_cutoff_and_parity() {
        for seed in 0..20 {
            let seq = sample_power_law_degrees(999, 2.1, 26, seed).unwrap();
            assert!(seq.degrees().iter().all(|&d| (1..=26).contains(&d)));
            assert_eq!(seq.total() % 2, 0);
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_power_law_degrees(500, 2.3, 20, 9).unwrap();
        let b = sample_power_law_degrees(500, 2.3, 20, 9).unwrap();
        let c = sample_power_law_degrees(500, 2.3, 20, 10).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn two_stubs_make_one_edge() {
        let seq = DegreeSequence::new(vec![1, 1]).unwrap();
        let g = build_configuration_graph(&seq, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn three_node_sequence_is_path_unless_self_loop() {
        // Stubs {0, 0, 1, 2}: a third of the pairings put both of node 0's
        // stubs together, leaving only the edge {1, 2}.
        let seq = DegreeSequence::new(vec![2, 1, 1]).unwrap();
        let mut paths = 0;
        for seed in 0..3000 {
            let g = build_configuration_graph(&seq, seed).unwrap();
            g.validate().unwrap();
            if g.edge_count() == 2 {
                assert_eq!(g.neighbors(0), &[1, 2]);
                paths += 1;
            } else {
                assert_eq!(g.edge_count(), 1);
                assert!(g.has_edge(1, 2));
            }
        }
        let frac = paths as f64 / 3000.0;
        assert!((frac - 2.0 / 3.0).abs() < 0.03, "path fraction {frac}");
    }

    #[test]
    fn configuration_never_exceeds_requested_degree() {
        let seq = sample_power_law_degrees(2000, 2.1, 37, 5).unwrap();
        let g = build_configuration_graph(&seq, 5).unwrap();
        g.validate().unwrap();
        for (v, &d) in seq.degrees().iter().enumerate() {
            assert!(g.degree(v) <= d);
        }
    }

    #[test]
    fn poisson_edge_cases() {
        let g = generate_poisson_graph(50, 0.0, 1).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert!(generate_poisson_graph(1, 0.0, 1).is_err());
        assert!(generate_poisson_graph(10, 9.5, 1).is_err());
        let full = generate_gnp_graph(6, 1.0, 1).unwrap();
        assert_eq!(full.edge_count(), 15);
    }

    #[test]
    fn poisson_mean_degree() {
        let g = generate_poisson_graph(1000, 3.0, 11).unwrap();
        g.validate().unwrap();
        assert!((g.mean_degree() - 3.0).abs() <= 0.3, "mean {}", g.mean_degree());
    }

    #[test]
    fn poisson_single_pair_frequency() {
        let hits = (0..10000u64)
            .filter(|&s| generate_poisson_graph(2, 1.0, s).unwrap().edge_count() == 1)
            .count();
        let f = hits as f64 / 10000.0;
        assert!((f - 0.5).abs() <= 0.02, "frequency {f}");
    }

    #[test]
    fn gnm_exact_edge_count() {
        for (n, m) in [(10, 0), (10, 45), (10, 30), (1000, 1500)] {
            let g = generate_gnm_graph(n, m, 4).unwrap();
            g.validate().unwrap();
            assert_eq!(g.edge_count(), m);
        }
        assert!(generate_gnm_graph(4, 7, 0).is_err());
    }
}
