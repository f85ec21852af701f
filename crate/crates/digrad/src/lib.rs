//! Distributed first-order optimization over strongly-connected digraphs.
//!
//! The crate simulates multi-agent gradient methods that need only
//! row-stochastic and/or column-stochastic consensus weights and therefore
//! run on arbitrary (unbalanced, directed) communication topologies:
//!
//! * `AB` — gradient tracking with simultaneous row- and column-stochastic
//!   weights.
//! * `ABN` — AB plus Nesterov momentum.
//! * `FROST` — row-stochastic-only gradient tracking with Perron eigenvector
//!   learning.
//! * `FROZEN` — FROST plus Nesterov momentum.
//!
//! Centralized gradient descent and Nesterov's method are included as
//! references, together with an experiment harness (seeded scenario
//! construction, grid tuning, CSV/SVG reports) driven by the `digrad` CLI.

pub mod central;
pub mod distributed;
pub mod error;
pub mod graph;
pub mod harness;
pub mod objective;
pub mod rng;
pub mod weights;

pub use central::MomentumSchedule;
pub use distributed::{AlgoConfig, AlgoState, Algorithm, WeightSet};
pub use error::Error;
pub use graph::Digraph;
pub use harness::{RunConfig, Trace};
pub use objective::{LogisticData, ObjectiveSet};
pub use weights::{PerronPair, Side, StochasticKind, StochasticMatrix};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
