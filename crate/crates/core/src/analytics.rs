//! Generating-function quantities for power-law and Poisson graphs,
//! evaluated as exact finite sums over the truncated degree support.
//!
//! Asymptotic (large-cutoff) forms are exposed separately so the gap between
//! the exact sums and the scaling laws can be measured.

use std::io::Write;

use crate::error::{Error, Result};
use crate::format::sig6;
use crate::graph::{degree_cutoff, degree_cutoff_with, CutoffRule};

/// `p_k = c k^-tau` on `k = 1..=m` for an `n`-node graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawModel {
    pub tau: f64,
    pub n: usize,
    pub m: usize,
    pub c: f64,
}

impl PowerLawModel {
    /// Model with an explicit cutoff rather than one derived from `n`.
    pub fn with_cutoff(n: usize, tau: f64, m: usize) -> Result<Self> {
        if !(tau.is_finite() && tau > 1.0) {
            return Err(Error::invalid(
                "tau",
                format!("must be a finite exponent > 1, got {tau}"),
            ));
        }
        if m == 0 {
            return Err(Error::invalid("m", "cutoff must be at least 1"));
        }
        if n == 0 {
            return Err(Error::invalid("n", "node count must be at least 1"));
        }
        let norm: f64 = (1..=m).map(|k| (k as f64).powf(-tau)).sum();
        Ok(PowerLawModel {
            tau,
            n,
            m,
            c: 1.0 / norm,
        })
    }

    pub fn pmf(&self, k: usize) -> f64 {
        if (1..=self.m).contains(&k) {
            self.c * (k as f64).powf(-self.tau)
        } else {
            0.0
        }
    }

    /// Excess-degree distribution: probability that a node reached along a
    /// random edge has `x` further edges, `x = 0..m-1`.
    pub fn excess_pmf(&self) -> Vec<f64> {
        let weights: Vec<f64> = (0..self.m).map(|x| (x as f64 + 1.0).powf(1.0 - self.tau)).collect();
        normalized(weights)
    }
}

fn normalized(mut weights: Vec<f64>) -> Vec<f64> {
    let total: f64 = weights.iter().sum();
    if total > 0.0 {
        weights.iter_mut().for_each(|w| *w /= total);
    }
    weights
}

/// `m = floor(n^(1/tau))`, `c = 1 / sum_{k=1}^{m} k^-tau`.
pub fn power_law_model(n: usize, tau: f64) -> Result<PowerLawModel> {
    PowerLawModel::with_cutoff(n, tau, degree_cutoff(n, tau)?)
}

pub fn power_law_model_with(n: usize, tau: f64, rule: CutoffRule) -> Result<PowerLawModel> {
    PowerLawModel::with_cutoff(n, tau, degree_cutoff_with(n, tau, rule)?)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GFSummary {
    /// `G0'(1)`
    pub mean_degree: f64,
    /// `G1'(1)`
    pub mean_excess: f64,
    /// Second neighbours of a random node, `G0'(1) G1'(1)`.
    pub z2_random: f64,
    /// Second neighbours of a node reached along an edge, `G1'(1)^2`.
    pub z2_walk: f64,
}

pub fn gf_summary(model: &PowerLawModel) -> GFSummary {
    let mut first = 0.0;
    let mut second = 0.0;
    for k in 1..=model.m {
        let p = model.pmf(k);
        let k = k as f64;
        first += k * p;
        second += k * (k - 1.0) * p;
    }
    let mean_excess = second / first;
    GFSummary {
        mean_degree: first,
        mean_excess,
        z2_random: first * mean_excess,
        z2_walk: mean_excess * mean_excess,
    }
}

/// Large-cutoff forms of the walk quantities: `z2_random ~ m^(3-tau)` and
/// `z2_walk = [(tau-2)/(1-m^(2-tau)) * m^(3-tau)/(3-tau)]^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticForms {
    pub z2_random: f64,
    pub z2_walk: f64,
}

pub fn asymptotic_forms(model: &PowerLawModel) -> AsymptoticForms {
    let (tau, m) = (model.tau, model.m as f64);
    let g1 = (tau - 2.0) / (1.0 - m.powf(2.0 - tau)) * m.powf(3.0 - tau) / (3.0 - tau);
    AsymptoticForms {
        z2_random: m.powf(3.0 - tau),
        z2_walk: g1 * g1,
    }
}

/// Exponents of `N` in the ideal step-count scalings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingExponents {
    /// `3 (1 - 2/tau)`
    pub random_walk: f64,
    /// `2 - 4/tau`
    pub degree_seq: f64,
    /// `2 (3/tau - 1)`, growth of `z2_walk`.
    pub z2_walk_exp: f64,
}

pub fn scaling_exponents(tau: f64) -> ScalingExponents {
    if !(tau > 2.0 && tau < 3.0) {
        log::warn!("tau = {tau} lies outside (2, 3); scaling formulas evaluated anyway");
    }
    ScalingExponents {
        random_walk: 3.0 * (1.0 - 2.0 / tau),
        degree_seq: 2.0 - 4.0 / tau,
        z2_walk_exp: 2.0 * (3.0 / tau - 1.0),
    }
}

/// `(ln n)^2`, the cover-step growth in the `tau -> 2` limit.
pub fn tau2_cover_steps(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::invalid("n", "need at least 2 nodes"));
    }
    let l = (n as f64).ln();
    Ok(l * l)
}

/// Neighbours scanned while walking down the top `a` degrees of the sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeSeqScan {
    /// `N a m^(1-tau)`
    pub z1: f64,
    /// `N a m^(2(2-tau))`
    pub z2: f64,
    /// `a`
    pub steps: f64,
}

pub fn degree_seq_neighbors(model: &PowerLawModel, a: f64) -> Result<DegreeSeqScan> {
    let m = model.m as f64;
    if !(a >= 0.0 && a < m) {
        return Err(Error::invalid("a", format!("window must lie in [0, m = {m}), got {a}")));
    }
    if a > m / 10.0 {
        log::warn!("window a = {a} is not small against the cutoff m = {m}");
    }
    let n = model.n as f64;
    let tau = model.tau;
    Ok(DegreeSeqScan {
        z1: n * a * m.powf(1.0 - tau),
        z2: n * a * m.powf(2.0 * (2.0 - tau)),
        steps: a,
    })
}

fn check_neighbors(n_neighbors: usize) -> Result<()> {
    if n_neighbors == 0 {
        Err(Error::invalid("n_neighbors", "must be at least 1"))
    } else {
        Ok(())
    }
}

/// Law of the largest of `n_neighbors` independent excess degrees, on
/// `x = 0..m-1`: `P(x)^n - P(x-1)^n` with `P` the excess-degree CDF.
pub fn richest_neighbor_distribution(model: &PowerLawModel, n_neighbors: usize) -> Result<Vec<f64>> {
    check_neighbors(n_neighbors)?;
    let n = n_neighbors as i32;
    let mut cdf = 0.0f64;
    let mut prev = 0.0f64;
    let out = model
        .excess_pmf()
        .into_iter()
        .map(|p| {
            cdf = (cdf + p).min(1.0);
            let now = cdf.powi(n);
            let mass = now - prev;
            prev = now;
            mass
        })
        .collect();
    Ok(normalized(out))
}

/// Continuous-tail closed form
/// `n (1+x)^(1-tau) (tau-2) (1-(x+1)^(2-tau))^(n-1) (1-N^(2/tau-1))^-n`
/// evaluated at `x = 0..m-1` and renormalised over that support. The
/// constant factors cancel under renormalisation; near `tau = 2` the bracket
/// `(1-(x+1)^(2-tau))/(tau-2)` is replaced by its limit `ln(1+x)`.
pub fn richest_neighbor_closed_form(model: &PowerLawModel, n_neighbors: usize) -> Result<Vec<f64>> {
    check_neighbors(n_neighbors)?;
    let tau = model.tau;
    let weights = (0..model.m)
        .map(|x| {
            let y = x as f64 + 1.0;
            let cdf_shape = if (tau - 2.0).abs() < 1e-6 {
                y.ln()
            } else {
                (1.0 - y.powf(2.0 - tau)) / (tau - 2.0)
            };
            let density = y.powf(1.0 - tau);
            if n_neighbors == 1 {
                density
            } else {
                density * cdf_shape.powi(n_neighbors as i32 - 1)
            }
        })
        .collect();
    Ok(normalized(weights))
}

/// Probability that the richest of `n_neighbors` neighbours has `x` excess
/// edges.
pub fn richest_neighbor_pmf(model: &PowerLawModel, n_neighbors: usize, x: usize) -> Result<f64> {
    if x >= model.m {
        return Err(Error::invalid(
            "x",
            format!("must lie in [0, {}], got {x}", model.m - 1),
        ));
    }
    Ok(richest_neighbor_distribution(model, n_neighbors)?[x])
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RichestNeighbor {
    pub n_neighbors: usize,
    pub expected_max: f64,
    /// `expected_max / n_neighbors`
    pub ratio: f64,
}

fn summarize(n_neighbors: usize, pmf: &[f64]) -> RichestNeighbor {
    let expected_max: f64 = pmf.iter().enumerate().map(|(x, p)| x as f64 * p).sum();
    RichestNeighbor {
        n_neighbors,
        expected_max,
        ratio: expected_max / n_neighbors as f64,
    }
}

pub fn richest_neighbor_ratio(model: &PowerLawModel, n_neighbors: usize) -> Result<RichestNeighbor> {
    Ok(summarize(
        n_neighbors,
        &richest_neighbor_distribution(model, n_neighbors)?,
    ))
}

pub fn richest_neighbor_ratio_closed_form(model: &PowerLawModel, n_neighbors: usize) -> Result<RichestNeighbor> {
    Ok(summarize(
        n_neighbors,
        &richest_neighbor_closed_form(model, n_neighbors)?,
    ))
}

/// Ratio curves for every `tau`, `n_neighbors = 1..=m`, as CSV
/// `tau,n_neighbors,expected_max,ratio`.
pub fn write_ratio_table<W: Write>(n: usize, taus: &[f64], closed_form: bool, mut sink: W) -> Result<()> {
    writeln!(sink, "tau,n_neighbors,expected_max,ratio")?;
    for &tau in taus {
        let model = power_law_model(n, tau)?;
        for k in 1..=model.m {
            let r = if closed_form {
                richest_neighbor_ratio_closed_form(&model, k)?
            } else {
                richest_neighbor_ratio(&model, k)?
            };
            writeln!(sink, "{},{},{},{}", sig6(tau), k, sig6(r.expected_max), sig6(r.ratio))?;
        }
    }
    Ok(())
}

/// Steps for a walk on a Poisson graph of mean degree `z` to cover a
/// fraction `coverage` of `n` nodes: `coverage * n / z`.
pub fn poisson_theory(n: usize, z: f64, coverage: f64) -> Result<f64> {
    if !(z > 0.0) {
        return Err(Error::invalid("z", format!("mean degree must be positive, got {z}")));
    }
    if !(coverage > 0.0 && coverage <= 1.0) {
        return Err(Error::invalid(
            "coverage",
            format!("must lie in (0, 1], got {coverage}"),
        ));
    }
    Ok(coverage * n as f64 / z)
}
