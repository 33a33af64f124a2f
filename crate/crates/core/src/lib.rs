//! Local search on power-law random graphs.
//!
//! The crate is organised around a small set of layers:
//!
//! * [`graph`] builds and loads the immutable [`Graph`] every experiment runs on
//!   (configuration-model power-law graphs with a degree cutoff, Poisson graphs,
//!   largest-component extraction and the edge-list format).
//! * [`analytics`] evaluates the generating-function quantities (mean and excess
//!   degree, second-neighbour counts, scaling exponents, richest-neighbour law)
//!   as exact finite sums.
//! * [`search`] runs message-passing walks (no-backtrack random walk and
//!   high-degree seeking self-avoiding walk) and TTL flooding, recording full
//!   traces.
//! * [`experiments`] sweeps graph sizes, fits log-log scaling exponents and
//!   writes CSV tables.
//! * [`snapshot`] ingests real network edge lists and replays the search on them.
//!
//! All randomness flows from explicit `u64` seeds through [`rng`].

pub mod analytics;
pub mod error;
pub mod experiments;
pub mod format;
pub mod graph;
pub mod rng;
pub mod search;
pub mod snapshot;

pub use error::{Error, Result};
pub use graph::{Graph, NodeId};
