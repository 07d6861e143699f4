//! Configuration-model random multigraphs with i.i.d. degrees: build them
//! by uniform stub pairing, measure component structure and distances, and
//! compare against branching-process and closed-form predictions.
//!
//! The crate splits into:
//!
//! - [`degree`]: degree laws (explicit, Pareto tail, degenerate), moments,
//!   size-biased offspring laws and their exact samplers
//! - [`graph`]: degree sequences, uniform stub pairing, multigraph storage,
//!   edge-list persistence
//! - [`components`]: union-find component summaries, giant-component
//!   statistics, star-component detection
//! - [`distances`]: BFS distances, exact diameter, double-sweep lower
//!   bounds, degree-2 runs, high-degree core exploration
//! - [`lazy_pairing`]: capped distance queries on graphs too large to
//!   materialize, revealing the pairing on demand
//! - [`branching`]: delayed branching processes, extinction probabilities,
//!   survival, conditioning on extinction
//! - [`oracle`]: closed-form constants and bounds used by tests and
//!   experiment post-processing
//! - [`experiment`] and [`stats`]: the seeded Monte Carlo harness and its
//!   summary statistics
//!
//! The `examples/` directory is the front door: each example is a small,
//! runnable walk through one capability (`cargo run --release --example
//! giant_component`). The `confmodel` binary wraps the same calls as
//! subcommands for scripted use.

pub mod branching;
pub mod components;
pub mod degree;
pub mod distances;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod lazy_pairing;
pub mod numeric;
pub mod oracle;
pub mod stats;

pub use branching::{delayed_survival, extinction_probability, DelayedBranching};
pub use components::{component_summary, giant_stats, ComponentSummary, GiantStats};
pub use degree::{size_biased_law, DegreeLaw, LawMoments, Moment, OffspringLaw};
pub use distances::{bfs_distances, exact_diameter, typical_distance};
pub use error::{Error, Result};
pub use experiment::{parse_config, run_experiment, ExperimentConfig, ResultTable};
pub use graph::{build, DegreeSequence, Multigraph};
pub use lazy_pairing::{CappedDistance, LazyPairing};
