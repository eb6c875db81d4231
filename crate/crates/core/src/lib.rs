//! Planning toolkit for a pursuit-evasion game on road networks.
//!
//! An evader enters a rooted network at time 0 and drives toward a goal node;
//! a pursuer enters at the root after a delay and can only learn about the
//! evader through per-node sensors (green, or red with the passage time).
//! This crate computes the maximum entry delay for which node-sweeping
//! pursuit policies still guarantee capture on tree networks, cross-checks it
//! against an exact game-tree oracle on small instances, replays policies in
//! a deterministic simulator, and generates the instance families used in the
//! accompanying analyses (spider networks, TSP-derived gadgets, random
//! bounded-degree trees).

pub mod error;
pub mod fixtures;
pub mod gen;
pub mod json;
pub mod labels;
pub mod net;
pub mod oracle;
pub mod sim;
pub mod sweep;
pub mod time;

pub use error::{Error, Result};
pub use json::{load_instance, load_instance_path};
pub use labels::NodeLabels;
pub use net::{metric_closure, MetricMode, PursuerMetric, RoadNetwork};
pub use time::ExtTime;
