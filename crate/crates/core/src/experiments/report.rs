//! CSV tables and the plain-text summary.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use super::runs::StepDistribution;
use super::sweep::{GraphKind, Metric, SweepResult};
use crate::analytics::scaling_exponents;
use crate::error::Result;
use crate::format::sig6;
use crate::search::{ColorCounts, Strategy};

/// Reference exponents the sweeps are compared against:
/// `(label, graph kind, metric, strategy, exponent)`.
pub const REFERENCE_EXPONENTS: [(&str, &str, Metric, Strategy, f64); 6] = [
    (
        "avg search, random walk",
        "power-law",
        Metric::AvgSearchSteps,
        Strategy::RandomWalkNoBacktrack,
        0.79,
    ),
    (
        "avg search, high degree",
        "power-law",
        Metric::AvgSearchSteps,
        Strategy::HighDegreeSelfAvoiding,
        0.70,
    ),
    (
        "half cover, random walk",
        "power-law",
        Metric::HalfCoverSteps,
        Strategy::RandomWalkNoBacktrack,
        0.37,
    ),
    (
        "half cover, high degree",
        "power-law",
        Metric::HalfCoverSteps,
        Strategy::HighDegreeSelfAvoiding,
        0.24,
    ),
    (
        "half cover, matched Poisson",
        "poisson-matched",
        Metric::HalfCoverSteps,
        Strategy::RandomWalkNoBacktrack,
        0.85,
    ),
    (
        "half cover, constant-z Poisson",
        "poisson-z",
        Metric::HalfCoverSteps,
        Strategy::RandomWalkNoBacktrack,
        1.0,
    ),
];

/// Reference exponent for a sweep configuration, if one is tabulated.
pub fn reference_exponent(kind: GraphKind, metric: Metric, strategy: Strategy) -> Option<f64> {
    let kind = kind.name();
    REFERENCE_EXPONENTS
        .iter()
        .find(|(_, k, m, s, _)| kind.starts_with(k) && *m == metric && *s == strategy)
        .map(|r| r.4)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RevisitRow {
    pub coverage_bucket: f64,
    pub revisit_fraction: f64,
    pub graph_kind: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ColorRow {
    pub window_start: usize,
    pub counts: ColorCounts,
    pub strategy: Strategy,
}

impl ColorRow {
    /// Rows for a colour histogram computed with window width `window`.
    pub fn from_histogram(histogram: &[ColorCounts], window: usize, strategy: Strategy) -> Vec<ColorRow> {
        histogram
            .iter()
            .enumerate()
            .map(|(i, &counts)| ColorRow {
                window_start: i * window,
                counts,
                strategy,
            })
            .collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub tau: Option<f64>,
    pub sweeps: Vec<SweepResult>,
    pub step_distribution: Option<StepDistribution>,
    pub revisits: Vec<RevisitRow>,
    pub colors: Vec<ColorRow>,
}

pub fn write_sweep_csv<W: Write>(sweeps: &[SweepResult], mut sink: W) -> Result<()> {
    writeln!(sink, "size,mean,std,trials,metric,strategy,graph_kind,tau,seed")?;
    for sweep in sweeps {
        let c = &sweep.config;
        for row in &sweep.rows {
            writeln!(
                sink,
                "{},{},{},{},{},{},{},{},{}",
                row.size,
                sig6(row.mean),
                sig6(row.std),
                row.trials,
                c.metric.name(),
                c.strategy.name(),
                c.graph_kind.name(),
                sig6(c.tau),
                c.seed
            )?;
        }
    }
    Ok(())
}

pub fn write_stepdist_csv<W: Write>(dist: Option<&StepDistribution>, mut sink: W) -> Result<()> {
    writeln!(sink, "step,mean_new_seen,cumulative_fraction")?;
    if let Some(d) = dist {
        for (step, (m, c)) in d.mean_new_seen.iter().zip(&d.cumulative_fraction).enumerate() {
            writeln!(sink, "{},{},{}", step, sig6(*m), sig6(*c))?;
        }
    }
    Ok(())
}

pub fn write_revisit_csv<W: Write>(rows: &[RevisitRow], mut sink: W) -> Result<()> {
    writeln!(sink, "coverage_bucket,revisit_fraction,graph_kind")?;
    for r in rows {
        writeln!(
            sink,
            "{},{},{}",
            sig6(r.coverage_bucket),
            sig6(r.revisit_fraction),
            r.graph_kind
        )?;
    }
    Ok(())
}

pub fn write_colors_csv<W: Write>(rows: &[ColorRow], mut sink: W) -> Result<()> {
    writeln!(sink, "window_start,white,gray,black,strategy")?;
    for r in rows {
        writeln!(
            sink,
            "{},{},{},{},{}",
            r.window_start,
            r.counts.white,
            r.counts.gray,
            r.counts.black,
            r.strategy.name()
        )?;
    }
    Ok(())
}

pub fn write_summary<W: Write>(report: &Report, mut sink: W) -> Result<()> {
    writeln!(sink, "reference exponents")?;
    for (label, _, _, _, value) in REFERENCE_EXPONENTS {
        writeln!(sink, "  {label:<32} {}", sig6(value))?;
    }
    let tau = report.tau.unwrap_or(2.1);
    let ideal = scaling_exponents(tau);
    writeln!(sink, "analytic exponents at tau = {}", sig6(tau))?;
    writeln!(sink, "  {:<32} {:.6}", "random walk", ideal.random_walk)?;
    writeln!(sink, "  {:<32} {:.6}", "degree sequence", ideal.degree_seq)?;
    writeln!(sink, "fitted exponents")?;
    if report.sweeps.is_empty() {
        writeln!(sink, "  (no sweeps)")?;
    }
    for sweep in &report.sweeps {
        let c = &sweep.config;
        let label = format!("{} {} {}", c.graph_kind.name(), c.metric.name(), c.strategy.name());
        let fitted = match &sweep.fit {
            Some(f) => format!("{} (r2 {}, {} sizes)", sig6(f.exponent), sig6(f.r_squared), f.points),
            None => "no fit".to_string(),
        };
        let reference = reference_exponent(c.graph_kind, c.metric, c.strategy)
            .map(|r| format!(" vs reference {}", sig6(r)))
            .unwrap_or_default();
        let flag = if sweep.unreliable {
            " [unreliable: censored trials]"
        } else {
            ""
        };
        writeln!(sink, "  {label:<32} {fitted}{reference}{flag}")?;
        if !sweep.skipped_sizes.is_empty() {
            writeln!(sink, "    skipped sizes: {:?}", sweep.skipped_sizes)?;
        }
    }
    Ok(())
}

fn create(dir: &Path, name: &str) -> Result<(PathBuf, BufWriter<File>)> {
    let path = dir.join(name);
    let file = File::create(&path)?;
    Ok((path, BufWriter::new(file)))
}

/// Writes `sweep.csv`, `stepdist.csv`, `revisit.csv`, `colors.csv` and
/// `summary.txt` into `dir`, creating it if needed.
pub fn emit_report(report: &Report, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();

    let (path, mut w) = create(dir, "sweep.csv")?;
    write_sweep_csv(&report.sweeps, &mut w)?;
    w.flush()?;
    written.push(path);

    let (path, mut w) = create(dir, "stepdist.csv")?;
    write_stepdist_csv(report.step_distribution.as_ref(), &mut w)?;
    w.flush()?;
    written.push(path);

    let (path, mut w) = create(dir, "revisit.csv")?;
    write_revisit_csv(&report.revisits, &mut w)?;
    w.flush()?;
    written.push(path);

    let (path, mut w) = create(dir, "colors.csv")?;
    write_colors_csv(&report.colors, &mut w)?;
    w.flush()?;
    written.push(path);

    let (path, mut w) = create(dir, "summary.txt")?;
    write_summary(report, &mut w)?;
    w.flush()?;
    written.push(path);

    Ok(written)
}
