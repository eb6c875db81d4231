//! Canonical example instances used throughout the test suites and docs.
//!
//! * `T1`: two branches whose goals are both reached at time 8; no positive
//!   entry delay can be guaranteed.
//! * `T2`: same tree with the right branch slowed down (goal at 12); the best
//!   sweeping entry delay is 2.
//! * `S1`: the two-leg spider with unit core distances 2 and leg horizon 10;
//!   the best entry delay is 4.

pub const T1_JSON: &str = r#"{
  "root": "s",
  "edges": [
    {"from": "s", "to": "a", "evader_time": 2},
    {"from": "s", "to": "b", "evader_time": 3},
    {"from": "a", "to": "g1", "evader_time": 6},
    {"from": "b", "to": "g2", "evader_time": 5}
  ],
  "pursuer": {
    "mode": "closure",
    "entries": [
      {"a": "s", "b": "a", "time": 2},
      {"a": "s", "b": "b", "time": 3},
      {"a": "a", "b": "b", "time": 3},
      {"a": "a", "b": "g1", "time": 4},
      {"a": "b", "b": "g2", "time": 4}
    ]
  }
}"#;

pub const T2_JSON: &str = r#"{
  "root": "s",
  "edges": [
    {"from": "s", "to": "a", "evader_time": 2},
    {"from": "s", "to": "b", "evader_time": 3},
    {"from": "a", "to": "g1", "evader_time": 6},
    {"from": "b", "to": "g2", "evader_time": 9}
  ],
  "pursuer": {
    "mode": "closure",
    "entries": [
      {"a": "s", "b": "a", "time": 2},
      {"a": "s", "b": "b", "time": 3},
      {"a": "a", "b": "b", "time": 3},
      {"a": "a", "b": "g1", "time": 4},
      {"a": "b", "b": "g2", "time": 4}
    ]
  }
}"#;

pub const S1_JSON: &str = r#"{
  "root": "s",
  "edges": [
    {"from": "s", "to": "c1", "evader_time": 2},
    {"from": "s", "to": "c2", "evader_time": 2},
    {"from": "c1", "to": "g1", "evader_time": 8},
    {"from": "c2", "to": "g2", "evader_time": 8}
  ],
  "pursuer": {
    "mode": "matrix",
    "entries": [
      {"a": "s", "b": "c1", "time": 2},
      {"a": "s", "b": "c2", "time": 2},
      {"a": "c1", "b": "c2", "time": 2},
      {"a": "c1", "b": "g1", "time": 2},
      {"a": "c2", "b": "g2", "time": 2},
      {"a": "c1", "b": "g2", "time": 4},
      {"a": "c2", "b": "g1", "time": 4},
      {"a": "s", "b": "g1", "time": 4},
      {"a": "s", "b": "g2", "time": 4},
      {"a": "g1", "b": "g2", "time": 6}
    ]
  }
}"#;

use crate::json::load_instance;
use crate::net::RoadNetwork;

pub fn t1() -> RoadNetwork {
    load_instance(T1_JSON.as_bytes()).expect("T1 fixture is valid")
}

pub fn t2() -> RoadNetwork {
    load_instance(T2_JSON.as_bytes()).expect("T2 fixture is valid")
}

pub fn s1() -> RoadNetwork {
    load_instance(S1_JSON.as_bytes()).expect("S1 fixture is valid")
}
