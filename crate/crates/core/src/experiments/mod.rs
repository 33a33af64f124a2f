//! Sweeps, fits and report tables.

mod fit;
mod report;
mod runs;
mod sweep;

pub use fit::{fit_power_law_scaling, ScalingFit};
pub use report::{
    emit_report, reference_exponent, write_colors_csv, write_revisit_csv, write_stepdist_csv, write_summary,
    write_sweep_csv, ColorRow, Report, RevisitRow, REFERENCE_EXPONENTS,
};
pub use runs::{
    average_curves, compare_strategies, revisit_run, step_distribution, strategy_comparison, StepDistribution,
    StrategyComparison,
};
pub use sweep::{
    avg_search_sweep, build_instance, mean_discovery_step, run_scaling_sweep, GraphKind, Instance, Metric, SweepConfig,
    SweepResult, SweepRow, MAX_CENSORED_FRACTION, MIN_LCC_NODES,
};

/// Master seed used when none is given.
pub const DEFAULT_SEED: u64 = 20020101;
