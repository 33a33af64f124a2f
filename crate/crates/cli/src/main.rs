//! `plsearch`: generate graphs, evaluate the analytic scalings, run searches
//! and sweeps, and replay snapshots. Every random draw derives from `--seed`.

use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use plsearch::analytics::{
    degree_seq_neighbors, gf_summary, poisson_theory, power_law_model_with, richest_neighbor_ratio, scaling_exponents,
    tau2_cover_steps, write_ratio_table,
};
use plsearch::experiments::{
    average_curves, build_instance, emit_report, revisit_run, run_scaling_sweep, step_distribution,
    strategy_comparison, write_summary, write_sweep_csv, ColorRow, GraphKind, Metric, Report, RevisitRow, SweepConfig,
    DEFAULT_SEED,
};
use plsearch::graph::{
    generate_poisson_graph, largest_connected_component, power_law_graph, read_edge_list, write_edge_list, CutoffRule,
    Graph,
};
use plsearch::rng::{derive_seed, stream};
use plsearch::search::{
    color_histogram, flood_search, run_search, write_trace_csv, SearchOptions, StopCondition, Strategy,
};
use plsearch::snapshot::{cumulative_found_experiment, estimate_exponent, ingest_snapshot, write_meta};
use plsearch::Error;

#[derive(Parser, Debug)]
#[command(name = "plsearch", version, about = "Local search on power-law random graphs")]
struct Cli {
    /// Worker threads for parallel trials (default: available parallelism).
    /// Results do not depend on this value.
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a random graph and write it as an edge list.
    Generate(GenerateArgs),
    /// Print generating-function quantities and ideal scaling exponents.
    Analyze(AnalyzeArgs),
    /// Run a single message-passing search and dump its trace.
    Search(SearchArgs),
    /// TTL-flood a query from one node and report reach and message cost.
    Flood(FloodArgs),
    /// Sweep graph sizes and fit the scaling exponent of a search metric.
    Sweep(SweepArgs),
    /// Load an edge-list snapshot, fit its degree exponent and replay searches.
    Ingest(IngestArgs),
    /// Run the single-size experiments and write every report table.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CutoffArg {
    /// m = floor(n^(1/tau))
    RootN,
    /// largest m with n c m^-tau >= 1
    UnitCount,
}

impl From<CutoffArg> for CutoffRule {
    fn from(c: CutoffArg) -> Self {
        match c {
            CutoffArg::RootN => CutoffRule::RootN,
            CutoffArg::UnitCount => CutoffRule::UnitExpectedCount,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    RandomWalk,
    HighDegree,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::RandomWalk => Strategy::RandomWalkNoBacktrack,
            StrategyArg::HighDegree => Strategy::HighDegreeSelfAvoiding,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    PowerLaw,
    Poisson,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SweepKindArg {
    PowerLaw,
    PoissonMatched,
    PoissonZ,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MetricArg {
    HalfCover,
    AvgSearch,
}

/// Where a command gets its graph: an edge-list file, or a freshly generated
/// power-law graph.
#[derive(Args, Debug)]
struct GraphSource {
    /// Edge-list file to load instead of generating a graph.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Node count of the generated graph.
    #[arg(long, default_value_t = 10000)]
    n: usize,
    /// Power-law exponent of the generated graph.
    #[arg(long, default_value_t = 2.1)]
    tau: f64,
    /// Degree cutoff rule for generation.
    #[arg(long, value_enum, default_value_t = CutoffArg::RootN)]
    cutoff: CutoffArg,
    /// Master seed.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    /// Node count.
    #[arg(long, default_value_t = 10000)]
    n: usize,
    /// Power-law exponent (power-law graphs).
    #[arg(long, default_value_t = 2.1)]
    tau: f64,
    /// Graph family.
    #[arg(long, value_enum, default_value_t = KindArg::PowerLaw)]
    kind: KindArg,
    /// Mean degree (Poisson graphs).
    #[arg(long, default_value_t = 3.0)]
    z: f64,
    /// Degree cutoff rule (power-law graphs).
    #[arg(long, value_enum, default_value_t = CutoffArg::RootN)]
    cutoff: CutoffArg,
    /// Keep only the largest connected component.
    #[arg(long)]
    lcc: bool,
    /// Master seed.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Output edge-list path.
    #[arg(long, default_value = "graph.edges")]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    /// Power-law exponent.
    #[arg(long, default_value_t = 2.1)]
    tau: f64,
    /// Node count used for the cutoff and finite sums.
    #[arg(long, default_value_t = 10000)]
    n: usize,
    /// Degree cutoff rule.
    #[arg(long, value_enum, default_value_t = CutoffArg::RootN)]
    cutoff: CutoffArg,
    /// Degree window for the degree-sequence scan estimate.
    #[arg(long, default_value_t = 1.0)]
    window: f64,
    /// Mean degree for the Poisson cover-step estimate.
    #[arg(long, default_value_t = 3.0)]
    z: f64,
    /// Coverage fraction for the Poisson cover-step estimate.
    #[arg(long, default_value_t = 0.5)]
    coverage: f64,
    /// Write richest-neighbour ratio curves (CSV) to this path.
    #[arg(long)]
    ratio_table: Option<PathBuf>,
    /// Exponents for the ratio table, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "2.0,2.25,2.5,2.75,3.0,3.25,3.5,3.75")]
    taus: Vec<f64>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[command(flatten)]
    graph: GraphSource,
    /// Walk strategy.
    #[arg(long, value_enum, default_value_t = StrategyArg::HighDegree)]
    strategy: StrategyArg,
    /// Source node (default: drawn from the seed).
    #[arg(long)]
    source: Option<usize>,
    /// Stop when this node is seen.
    #[arg(long, conflicts_with = "coverage")]
    target: Option<usize>,
    /// Stop when this fraction of the graph is seen (default 0.5 when no target).
    #[arg(long)]
    coverage: Option<f64>,
    /// Knowledge radius: 1 (neighbours) or 2 (neighbours of neighbours).
    #[arg(long, default_value_t = 2)]
    knowledge_radius: usize,
    /// Safety cap on passes (default 100 * N * mean degree).
    #[arg(long)]
    step_limit: Option<usize>,
    /// Colour-histogram window width.
    #[arg(long, default_value_t = 50)]
    window: usize,
    /// Trace CSV path.
    #[arg(long, default_value = "trace.csv")]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct FloodArgs {
    #[command(flatten)]
    graph: GraphSource,
    /// Source node (default: drawn from the seed).
    #[arg(long)]
    source: Option<usize>,
    /// Hop budget.
    #[arg(long, default_value_t = 7)]
    ttl: usize,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Metric to measure per trial.
    #[arg(long, value_enum, default_value_t = MetricArg::HalfCover)]
    metric: MetricArg,
    /// Walk strategy.
    #[arg(long, value_enum, default_value_t = StrategyArg::HighDegree)]
    strategy: StrategyArg,
    /// Graph family.
    #[arg(long, value_enum, default_value_t = SweepKindArg::PowerLaw)]
    graph: SweepKindArg,
    /// Mean degree for --graph poisson-z.
    #[arg(long, default_value_t = 3.0)]
    z: f64,
    /// Power-law exponent.
    #[arg(long, default_value_t = 2.1)]
    tau: f64,
    /// Node counts, comma separated and strictly increasing.
    #[arg(long, value_delimiter = ',', default_value = "1000,2000,4000,8000,16000")]
    sizes: Vec<usize>,
    /// Trials per size.
    #[arg(long, default_value_t = 50)]
    trials: usize,
    /// Reuse one graph per size instead of generating one per trial.
    #[arg(long)]
    shared_graph: bool,
    /// Degree cutoff rule.
    #[arg(long, value_enum, default_value_t = CutoffArg::RootN)]
    cutoff: CutoffArg,
    /// Knowledge radius: 1 or 2.
    #[arg(long, default_value_t = 2)]
    knowledge_radius: usize,
    /// Master seed.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Directory for sweep.csv and summary.txt.
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

#[derive(Args, Debug)]
struct IngestArgs {
    /// Edge-list snapshot.
    #[arg(long)]
    input: PathBuf,
    /// Smallest degree in the exponent fit.
    #[arg(long, default_value_t = 1)]
    k_min: usize,
    /// Largest degree in the exponent fit (default: largest degree seen twice).
    #[arg(long)]
    k_max: Option<usize>,
    /// Search trials.
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Copies of the file placed on distinct nodes.
    #[arg(long, default_value_t = 1)]
    replicas: usize,
    /// Knowledge radius: 1 or 2.
    #[arg(long, default_value_t = 2)]
    knowledge_radius: usize,
    /// Master seed.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Directory for found.csv and meta.txt.
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

#[derive(Args, Debug)]
struct ReportArgs {
    /// Node count for the step-distribution and revisit experiments.
    #[arg(long, default_value_t = 10000)]
    n: usize,
    /// Node count for the colour bar charts.
    #[arg(long, default_value_t = 1000)]
    color_n: usize,
    /// Power-law exponent.
    #[arg(long, default_value_t = 2.1)]
    tau: f64,
    /// Trials for the step distribution.
    #[arg(long, default_value_t = 20)]
    trials: usize,
    /// Walks per graph kind for the revisit curves.
    #[arg(long, default_value_t = 20)]
    runs: usize,
    /// Colour-histogram window width.
    #[arg(long, default_value_t = 50)]
    window: usize,
    /// Revisit bucket width, as a fraction of the graph.
    #[arg(long, default_value_t = 0.05)]
    bucket: f64,
    /// Also run the standard half-cover and average-search sweeps over these sizes.
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    /// Trials per size for --sizes.
    #[arg(long, default_value_t = 50)]
    sweep_trials: usize,
    /// Master seed.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Output directory.
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

/// Error carrying the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParameter { .. } | Error::NodeOutOfRange { .. } => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Error::from(e).into()
    }
}

fn usage(flag: &str, reason: impl std::fmt::Display) -> Failure {
    Failure {
        code: 2,
        message: format!("invalid value for --{flag}: {reason}"),
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn check_tau(tau: f64) -> CliResult {
    if tau.is_finite() && tau > 1.0 {
        Ok(())
    } else {
        Err(usage("tau", format!("{tau} (must be > 1)")))
    }
}

fn check_radius(r: usize) -> CliResult {
    if (1..=2).contains(&r) {
        Ok(())
    } else {
        Err(usage("knowledge-radius", format!("{r} (must be 1 or 2)")))
    }
}

fn check_fraction(flag: &str, f: f64) -> CliResult {
    if f > 0.0 && f <= 1.0 {
        Ok(())
    } else {
        Err(usage(flag, format!("{f} (must lie in (0, 1])")))
    }
}

fn check_positive(flag: &str, v: usize) -> CliResult {
    if v > 0 {
        Ok(())
    } else {
        Err(usage(flag, "must be at least 1"))
    }
}

fn writer(path: &Path) -> CliResult<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path).map_err(|e| Failure {
        code: 1,
        message: format!("cannot write {}: {e}", path.display()),
    })?))
}

fn ensure_dir(dir: &Path) -> CliResult {
    fs::create_dir_all(dir).map_err(|e| Failure {
        code: 1,
        message: format!("cannot create {}: {e}", dir.display()),
    })
}

fn load_graph(src: &GraphSource) -> CliResult<Graph> {
    match &src.input {
        Some(path) => {
            let file = File::open(path).map_err(|e| Failure {
                code: 1,
                message: format!("cannot read {}: {e}", path.display()),
            })?;
            Ok(largest_connected_component(&read_edge_list(BufReader::new(file))?.graph).graph)
        }
        None => {
            check_tau(src.tau)?;
            check_positive("n", src.n)?;
            let g = power_law_graph(src.n, src.tau, src.cutoff.into(), src.seed)?;
            Ok(largest_connected_component(&g).graph)
        }
    }
}

fn pick_source(g: &Graph, explicit: Option<usize>, seed: u64) -> CliResult<usize> {
    use rand_source::pick;
    match explicit {
        Some(s) if s < g.node_count() => Ok(s),
        Some(s) => Err(usage(
            "source",
            format!("{s} out of range for {} nodes", g.node_count()),
        )),
        None if g.is_empty() => Err(usage("input", "graph has no nodes")),
        None => Ok(pick(g.node_count(), derive_seed(seed, stream::ENDPOINTS, 0))),
    }
}

mod rand_source {
    /// Deterministic index in `0..n` from a seed.
    pub fn pick(n: usize, seed: u64) -> usize {
        (seed % n as u64) as usize
    }
}

fn cmd_generate(a: &GenerateArgs) -> CliResult {
    check_positive("n", a.n)?;
    let g = match a.kind {
        KindArg::PowerLaw => {
            check_tau(a.tau)?;
            power_law_graph(a.n, a.tau, a.cutoff.into(), a.seed)?
        }
        KindArg::Poisson => {
            if a.n < 2 {
                return Err(usage("n", "Poisson graphs need at least 2 nodes"));
            }
            if !(a.z >= 0.0 && a.z <= (a.n - 1) as f64) {
                return Err(usage("z", format!("{} (must lie in [0, n - 1])", a.z)));
            }
            generate_poisson_graph(a.n, a.z, a.seed)?
        }
    };
    let g = if a.lcc {
        largest_connected_component(&g).graph
    } else {
        g
    };
    write_edge_list(&g, writer(&a.out)?)?;
    println!(
        "wrote {}: {} nodes, {} edges, max degree {}",
        a.out.display(),
        g.node_count(),
        g.edge_count(),
        g.max_degree()
    );
    Ok(())
}

fn cmd_analyze(a: &AnalyzeArgs) -> CliResult {
    check_tau(a.tau)?;
    check_positive("n", a.n)?;
    check_fraction("coverage", a.coverage)?;
    if !(a.z > 0.0) {
        return Err(usage("z", "must be positive"));
    }
    let model = power_law_model_with(a.n, a.tau, a.cutoff.into())?;
    if !(a.window >= 0.0 && a.window < model.m as f64) {
        return Err(usage(
            "window",
            format!("{} (must lie in [0, m = {}))", a.window, model.m),
        ));
    }
    let exps = scaling_exponents(a.tau);
    let gf = gf_summary(&model);
    let scan = degree_seq_neighbors(&model, a.window)?;
    let mut out = io::stdout().lock();
    writeln!(out, "random-walk exponent: {:.6}", exps.random_walk)?;
    writeln!(out, "degree-seq exponent: {:.6}", exps.degree_seq)?;
    writeln!(out, "z2-walk exponent: {:.6}", exps.z2_walk_exp)?;
    writeln!(
        out,
        "model: n = {}, tau = {}, m = {}, c = {:.6}",
        model.n, model.tau, model.m, model.c
    )?;
    writeln!(out, "mean degree: {:.6}", gf.mean_degree)?;
    writeln!(out, "mean excess degree: {:.6}", gf.mean_excess)?;
    writeln!(out, "z2 (random node): {:.6}", gf.z2_random)?;
    writeln!(out, "z2 (along edge): {:.6}", gf.z2_walk)?;
    if a.n >= 2 {
        writeln!(out, "ln^2(n): {:.6}", tau2_cover_steps(a.n)?)?;
    }
    writeln!(
        out,
        "degree-seq scan (a = {}): z1 = {:.6}, z2 = {:.6}",
        a.window, scan.z1, scan.z2
    )?;
    for k in [1usize, 2, 5, 10] {
        if k <= model.m {
            let r = richest_neighbor_ratio(&model, k)?;
            writeln!(
                out,
                "richest of {k}: expected excess {:.6}, ratio {:.6}",
                r.expected_max, r.ratio
            )?;
        }
    }
    writeln!(
        out,
        "poisson cover steps (n = {}, z = {}, coverage = {}): {:.6}",
        a.n,
        a.z,
        a.coverage,
        poisson_theory(a.n, a.z, a.coverage)?
    )?;
    if let Some(path) = &a.ratio_table {
        for &t in &a.taus {
            check_tau(t).map_err(|_| usage("taus", format!("{t} (must be > 1)")))?;
        }
        let mut w = writer(path)?;
        write_ratio_table(a.n, &a.taus, false, &mut w)?;
        w.flush()?;
        writeln!(out, "wrote {}", path.display())?;
    }
    Ok(())
}

fn cmd_search(a: &SearchArgs) -> CliResult {
    check_radius(a.knowledge_radius)?;
    check_positive("window", a.window)?;
    if let Some(c) = a.coverage {
        check_fraction("coverage", c)?;
    }
    if a.step_limit == Some(0) {
        return Err(usage("step-limit", "must be at least 1"));
    }
    let g = load_graph(&a.graph)?;
    let source = pick_source(&g, a.source, a.graph.seed)?;
    let stop = match a.target {
        Some(t) if t >= g.node_count() => return Err(usage("target", format!("{t} out of range"))),
        Some(t) if t == source => return Err(usage("target", "must differ from the source")),
        Some(t) => StopCondition::TargetFound(t),
        None => StopCondition::CoverageReached(a.coverage.unwrap_or(0.5)),
    };
    let opts = SearchOptions {
        step_limit: a.step_limit,
        knowledge_radius: a.knowledge_radius,
    };
    let walk_seed = derive_seed(a.graph.seed, stream::WALK, 0);
    let trace = run_search(&g, source, a.strategy.into(), &stop, &opts, walk_seed)?;
    let mut w = writer(&a.out)?;
    write_trace_csv(&trace, None, true, &mut w)?;
    w.flush()?;
    let hist = color_histogram(&trace, a.window)?;
    let mut out = io::stdout().lock();
    writeln!(out, "graph: {} nodes, {} edges", g.node_count(), g.edge_count())?;
    writeln!(out, "source {source}, strategy {}: {:?}", trace.strategy, trace.outcome)?;
    for (i, c) in hist.iter().enumerate() {
        writeln!(
            out,
            "  steps {:>6}+: white {} gray {} black {}",
            i * a.window,
            c.white,
            c.gray,
            c.black
        )?;
    }
    writeln!(out, "wrote {}", a.out.display())?;
    Ok(())
}

fn cmd_flood(a: &FloodArgs) -> CliResult {
    let g = load_graph(&a.graph)?;
    let source = pick_source(&g, a.source, a.graph.seed)?;
    let r = flood_search(&g, source, a.ttl)?;
    println!(
        "source {source}, ttl {}: reached {} of {} nodes with {} messages",
        a.ttl,
        r.reached.len(),
        g.node_count(),
        r.message_count
    );
    Ok(())
}

fn sweep_kind(kind: SweepKindArg, z: f64) -> GraphKind {
    match kind {
        SweepKindArg::PowerLaw => GraphKind::PowerLaw,
        SweepKindArg::PoissonMatched => GraphKind::PoissonMatched,
        SweepKindArg::PoissonZ => GraphKind::PoissonConstantZ(z),
    }
}

fn cmd_sweep(a: &SweepArgs) -> CliResult {
    check_tau(a.tau)?;
    check_radius(a.knowledge_radius)?;
    check_positive("trials", a.trials)?;
    if a.sizes.len() < 2 || a.sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(usage("sizes", "need at least two strictly increasing sizes"));
    }
    if a.sizes[0] < 2 {
        return Err(usage("sizes", "every size must be at least 2"));
    }
    if matches!(a.graph, SweepKindArg::PoissonZ) && !(a.z > 0.0 && a.z <= (a.sizes[0] - 1) as f64) {
        return Err(usage("z", format!("{} out of range for size {}", a.z, a.sizes[0])));
    }
    let metric = match a.metric {
        MetricArg::HalfCover => Metric::HalfCoverSteps,
        MetricArg::AvgSearch => Metric::AvgSearchSteps,
    };
    let mut config = SweepConfig::new(
        a.sizes.clone(),
        a.tau,
        sweep_kind(a.graph, a.z),
        a.strategy.into(),
        metric,
    );
    config.trials = a.trials;
    config.seed = a.seed;
    config.fresh_graph_per_trial = !a.shared_graph;
    config.cutoff_rule = a.cutoff.into();
    config.search.knowledge_radius = a.knowledge_radius;
    let result = run_scaling_sweep(&config)?;

    ensure_dir(&a.out_dir)?;
    let csv = a.out_dir.join("sweep.csv");
    let mut w = writer(&csv)?;
    write_sweep_csv(std::slice::from_ref(&result), &mut w)?;
    w.flush()?;
    let report = Report {
        tau: Some(a.tau),
        sweeps: vec![result],
        ..Default::default()
    };
    let summary = a.out_dir.join("summary.txt");
    let mut w = writer(&summary)?;
    write_summary(&report, &mut w)?;
    w.flush()?;
    write_summary(&report, io::stdout().lock())?;
    println!("wrote {} and {}", csv.display(), summary.display());
    Ok(())
}

fn cmd_ingest(a: &IngestArgs) -> CliResult {
    check_positive("trials", a.trials)?;
    check_positive("replicas", a.replicas)?;
    check_positive("k-min", a.k_min)?;
    check_radius(a.knowledge_radius)?;
    let file = File::open(&a.input).map_err(|e| Failure {
        code: 1,
        message: format!("cannot read {}: {e}", a.input.display()),
    })?;
    let (g, meta) = ingest_snapshot(BufReader::new(file), &a.input.display().to_string())?;
    let estimate = match estimate_exponent(&g, a.k_min, a.k_max) {
        Ok(e) => Some(e),
        Err(Error::TooFewBins { found, .. }) => {
            eprintln!("warning: only {found} degree bins in the fit window; no exponent estimate");
            None
        }
        Err(e) => return Err(e.into()),
    };
    let opts = SearchOptions::default().with_knowledge_radius(a.knowledge_radius);
    let curve = cumulative_found_experiment(&g, a.trials, a.replicas, &opts, a.seed)?;

    ensure_dir(&a.out_dir)?;
    let found = a.out_dir.join("found.csv");
    let mut w = writer(&found)?;
    curve.write_csv(&mut w)?;
    w.flush()?;
    let meta_path = a.out_dir.join("meta.txt");
    let mut w = writer(&meta_path)?;
    write_meta(&meta, estimate.as_ref(), &mut w)?;
    w.flush()?;

    write_meta(&meta, estimate.as_ref(), io::stdout().lock())?;
    match curve.median_steps() {
        Some(m) => println!("median steps to find: {m}"),
        None => println!("median steps to find: not reached"),
    }
    println!("censored searches: {}", curve.censored);
    println!("wrote {} and {}", found.display(), meta_path.display());
    Ok(())
}

fn cmd_report(a: &ReportArgs) -> CliResult {
    check_tau(a.tau)?;
    check_positive("n", a.n)?;
    check_positive("color-n", a.color_n)?;
    check_positive("trials", a.trials)?;
    check_positive("runs", a.runs)?;
    check_positive("window", a.window)?;
    check_fraction("bucket", a.bucket)?;
    if !a.sizes.is_empty() {
        check_positive("sweep-trials", a.sweep_trials)?;
        if a.sizes.len() < 2 || a.sizes.windows(2).any(|w| w[0] >= w[1]) || a.sizes[0] < 2 {
            return Err(usage("sizes", "need at least two strictly increasing sizes >= 2"));
        }
    }
    let opts = SearchOptions::default();
    let rule = CutoffRule::RootN;
    let mut report = Report {
        tau: Some(a.tau),
        ..Default::default()
    };

    let g = build_instance(GraphKind::PowerLaw, a.n, a.tau, rule, a.seed)?.graph;
    report.step_distribution = Some(step_distribution(
        &g,
        Strategy::HighDegreeSelfAvoiding,
        a.trials,
        &opts,
        a.seed,
    )?);

    let small = build_instance(GraphKind::PowerLaw, a.color_n, a.tau, rule, a.seed)?.graph;
    let cmp = strategy_comparison(&small, &opts, a.seed)?;
    for trace in [&cmp.first, &cmp.second] {
        let hist = color_histogram(trace, a.window)?;
        report
            .colors
            .extend(ColorRow::from_histogram(&hist, a.window, trace.strategy));
    }

    for kind in [GraphKind::PowerLaw, GraphKind::PoissonMatched] {
        let curves = (0..a.runs)
            .map(|run| {
                let seed = derive_seed(a.seed, stream::TRIAL, run as u64);
                let g = build_instance(kind, a.n, a.tau, rule, seed)?.graph;
                revisit_run(&g, Strategy::RandomWalkNoBacktrack, 1.0, a.bucket, &opts, seed)
            })
            .collect::<Result<Vec<_>, Error>>()?;
        for (edge, f) in average_curves(&curves) {
            report.revisits.push(RevisitRow {
                coverage_bucket: edge,
                revisit_fraction: f,
                graph_kind: kind.name(),
            });
        }
    }

    if !a.sizes.is_empty() {
        let runs = [
            (
                GraphKind::PowerLaw,
                Metric::HalfCoverSteps,
                Strategy::RandomWalkNoBacktrack,
            ),
            (
                GraphKind::PowerLaw,
                Metric::HalfCoverSteps,
                Strategy::HighDegreeSelfAvoiding,
            ),
            (
                GraphKind::PowerLaw,
                Metric::AvgSearchSteps,
                Strategy::RandomWalkNoBacktrack,
            ),
            (
                GraphKind::PowerLaw,
                Metric::AvgSearchSteps,
                Strategy::HighDegreeSelfAvoiding,
            ),
            (
                GraphKind::PoissonMatched,
                Metric::HalfCoverSteps,
                Strategy::RandomWalkNoBacktrack,
            ),
        ];
        for (kind, metric, strategy) in runs {
            let mut config = SweepConfig::new(a.sizes.clone(), a.tau, kind, strategy, metric);
            config.trials = a.sweep_trials;
            config.seed = a.seed;
            report.sweeps.push(run_scaling_sweep(&config)?);
        }
    }

    ensure_dir(&a.out_dir)?;
    let files = emit_report(&report, &a.out_dir)?;
    write_summary(&report, io::stdout().lock())?;
    for f in files {
        println!("wrote {}", f.display());
    }
    Ok(())
}

fn run(cli: &Cli) -> CliResult {
    if let Some(w) = cli.workers {
        check_positive("workers", w)?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .map_err(|e| Failure {
                code: 1,
                message: format!("cannot start worker pool: {e}"),
            })?;
    }
    match &cli.command {
        Command::Generate(a) => cmd_generate(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Search(a) => cmd_search(a),
        Command::Flood(a) => cmd_flood(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Ingest(a) => cmd_ingest(a),
        Command::Report(a) => cmd_report(a),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
