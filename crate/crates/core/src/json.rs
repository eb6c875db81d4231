//! On-disk document formats.
//!
//! Instance documents look like:
//!
//! ```json
//! { "root": "s",
//!   "edges": [ {"from": "s", "to": "a", "evader_time": 2} ],
//!   "pursuer": { "mode": "closure",
//!                "entries": [ {"a": "s", "b": "a", "time": 2} ] } }
//! ```
//!
//! In `"matrix"` mode the entries spell out the full symmetric pursuer
//! metric; in `"closure"` mode they are undirected weighted edges and the
//! metric is their shortest-path closure. All times are nonnegative integers.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::labels::NodeLabels;
use crate::net::{MetricMode, PursuerMetric, RoadNetwork};
use crate::time::ExtTime;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDoc {
    pub root: String,
    pub edges: Vec<EdgeDoc>,
    pub pursuer: PursuerDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub from: String,
    pub to: String,
    pub evader_time: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PursuerDoc {
    pub mode: PursuerModeDoc,
    pub entries: Vec<PairDoc>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PursuerModeDoc {
    Matrix,
    Closure,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDoc {
    pub a: String,
    pub b: String,
    pub time: u64,
}

/// Parses and validates an instance document.
pub fn load_instance(bytes: &[u8]) -> Result<RoadNetwork> {
    let doc: InstanceDoc =
        serde_json::from_slice(bytes).map_err(|e| Error::parse(e.to_string()))?;
    network_from_doc(&doc)
}

pub fn load_instance_path(path: &std::path::Path) -> Result<RoadNetwork> {
    let bytes = std::fs::read(path)?;
    load_instance(&bytes)
}

pub fn network_from_doc(doc: &InstanceDoc) -> Result<RoadNetwork> {
    let to_i64 = |v: u64, what: &str| -> Result<i64> {
        i64::try_from(v)
            .ok()
            .filter(|&x| x <= crate::net::MAX_TIME)
            .ok_or_else(|| Error::validation(format!("{what} out of range")))
    };
    let mut edges = Vec::with_capacity(doc.edges.len());
    for e in &doc.edges {
        edges.push((
            e.from.clone(),
            e.to.clone(),
            to_i64(e.evader_time, "evader_time")?,
        ));
    }
    let mut entries = Vec::with_capacity(doc.pursuer.entries.len());
    for p in &doc.pursuer.entries {
        entries.push((p.a.clone(), p.b.clone(), to_i64(p.time, "pursuer time")?));
    }
    let mode = match doc.pursuer.mode {
        PursuerModeDoc::Matrix => MetricMode::Matrix,
        PursuerModeDoc::Closure => MetricMode::Closure,
    };
    RoadNetwork::new(&doc.root, &edges, mode, &entries)
}

/// Renders a network back into a document. Edges and pursuer entries are
/// emitted in sorted order so equal instances serialize byte-identically.
pub fn network_to_doc(net: &RoadNetwork) -> InstanceDoc {
    let edges = net
        .edges()
        .iter()
        .map(|e| EdgeDoc {
            from: net.id(e.from).to_string(),
            to: net.id(e.to).to_string(),
            evader_time: e.evader_time as u64,
        })
        .collect();
    let entries = match net.metric() {
        PursuerMetric::Dense { n, d } => {
            let mut out = Vec::new();
            for a in 0..*n {
                for b in a + 1..*n {
                    out.push(PairDoc {
                        a: net.id(a).to_string(),
                        b: net.id(b).to_string(),
                        time: d[a * n + b] as u64,
                    });
                }
            }
            out
        }
        PursuerMetric::TreePaths { parent, root_dist, .. } => {
            let mut out = Vec::new();
            for v in 0..net.len() {
                if let Some(p) = parent[v] {
                    let (a, b) = if net.id(p) <= net.id(v) { (p, v) } else { (v, p) };
                    out.push(PairDoc {
                        a: net.id(a).to_string(),
                        b: net.id(b).to_string(),
                        time: (root_dist[v] - root_dist[p]) as u64,
                    });
                }
            }
            out.sort_by(|x, y| (x.a.clone(), x.b.clone()).cmp(&(y.a.clone(), y.b.clone())));
            out
        }
    };
    InstanceDoc {
        root: net.id(net.root()).to_string(),
        edges,
        pursuer: PursuerDoc {
            mode: match net.metric_mode() {
                MetricMode::Matrix => PursuerModeDoc::Matrix,
                MetricMode::Closure => PursuerModeDoc::Closure,
            },
            entries,
        },
    }
}

pub fn instance_to_string(net: &RoadNetwork) -> String {
    serde_json::to_string_pretty(&network_to_doc(net)).expect("instance serializes")
}

/// TSP input document: `{ "n": 4, "distances": [{"a":0,"b":1,"d":2}, ...],
/// "target": 9 }`. Distances are given for unordered pairs over `0..n`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TspDoc {
    pub n: usize,
    pub distances: Vec<TspPairDoc>,
    pub target: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TspPairDoc {
    pub a: usize,
    pub b: usize,
    pub d: u64,
}

/// Per-node solver labels as emitted in result documents.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabelDoc {
    pub t: i64,
    pub depth: u32,
    #[serde(rename = "L")]
    pub lkd: String,
    #[serde(rename = "D")]
    pub latest_arrival: i64,
    #[serde(rename = "S")]
    pub latest_sweep_start: ExtTime,
}

pub fn labels_to_doc(net: &RoadNetwork, labels: &NodeLabels) -> BTreeMap<String, LabelDoc> {
    (0..net.len())
        .map(|v| {
            (
                net.id(v).to_string(),
                LabelDoc {
                    t: labels.t[v],
                    depth: labels.depth[v],
                    lkd: net.id(labels.lkd[v]).to_string(),
                    latest_arrival: labels.latest_arrival[v],
                    latest_sweep_start: labels.latest_sweep_start[v],
                },
            )
        })
        .collect()
}
