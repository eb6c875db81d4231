//! Structural per-node labels on tree instances.
//!
//! `t(v)` is when the evader reaches `v` if its path goes through `v`,
//! `depth(v)` counts edges from the root, and `lkd(v)` is the deepest
//! descendant the evader is forced through once it passes `v` — the end of
//! the chain of only children starting at `v`. The solver fills in
//! `latest_arrival` (D) and `latest_sweep_start` (S) on top of these.

use crate::error::Result;
use crate::net::RoadNetwork;
use crate::time::ExtTime;

/// The full label set for one instance; the sweep solver's entire state.
#[derive(Debug, Clone)]
pub struct NodeLabels {
    /// Evader arrival time from the root.
    pub t: Vec<i64>,
    /// Edge count from the root.
    pub depth: Vec<u32>,
    /// Lowest known descendant: end of the only-child chain from each node.
    pub lkd: Vec<usize>,
    /// Latest pursuer arrival that still guarantees capture (D).
    pub latest_arrival: Vec<i64>,
    /// Latest feasible sweep start (S); `NegInf` when no sweep works.
    pub latest_sweep_start: Vec<ExtTime>,
}

impl NodeLabels {
    /// Computes t, depth and lkd for a tree; D and S start out unset
    /// (0 / NegInf) and are filled by the solver.
    pub fn structural(net: &RoadNetwork) -> Result<NodeLabels> {
        net.require_tree()?;
        Ok(NodeLabels {
            t: compute_evader_times(net),
            depth: compute_depths(net),
            lkd: (0..net.len()).map(|v| lowest_known_descendant(net, v)).collect(),
            latest_arrival: vec![0; net.len()],
            latest_sweep_start: vec![ExtTime::NegInf; net.len()],
        })
    }
}

/// Breadth-first accumulation of evader times along root paths; `t(root) = 0`.
pub fn compute_evader_times(net: &RoadNetwork) -> Vec<i64> {
    let mut t = vec![0i64; net.len()];
    let mut queue = std::collections::VecDeque::from([net.root()]);
    while let Some(v) = queue.pop_front() {
        for &(c, w) in net.children(v) {
            t[c] = t[v] + w;
            queue.push_back(c);
        }
    }
    t
}

/// `depth(root) = 0`, `depth(child) = depth(parent) + 1`.
pub fn compute_depths(net: &RoadNetwork) -> Vec<u32> {
    let mut depth = vec![0u32; net.len()];
    let mut queue = std::collections::VecDeque::from([net.root()]);
    while let Some(v) = queue.pop_front() {
        for &(c, _) in net.children(v) {
            depth[c] = depth[v] + 1;
            queue.push_back(c);
        }
    }
    depth
}

/// Follows the chain of only children from `v`; stops at the first node with
/// zero or several children. Once the evader passes `v` it must also pass
/// every node on this chain.
pub fn lowest_known_descendant(net: &RoadNetwork, v: usize) -> usize {
    let mut cur = v;
    while let [(only, _)] = net.children(cur) {
        cur = *only;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::json::load_instance;
    use crate::net::{MetricMode, RoadNetwork};

    fn by_id<'a, T: Copy>(net: &RoadNetwork, xs: &'a [T], id: &str) -> T {
        xs[net.node_index(id).unwrap()]
    }

    #[test]
    fn t2_evader_times() {
        let net = fixtures::t2();
        let t = compute_evader_times(&net);
        for (id, want) in [("s", 0), ("a", 2), ("b", 3), ("g1", 8), ("g2", 12)] {
            assert_eq!(by_id(&net, &t, id), want, "t({id})");
        }
    }

    #[test]
    fn t2_depths() {
        let net = fixtures::t2();
        let d = compute_depths(&net);
        for (id, want) in [("s", 0), ("a", 1), ("b", 1), ("g1", 2), ("g2", 2)] {
            assert_eq!(by_id(&net, &d, id), want, "depth({id})");
        }
    }

    #[test]
    fn single_node_and_chain() {
        let single = RoadNetwork::new("s", &[], MetricMode::Matrix, &[]).unwrap();
        assert_eq!(compute_evader_times(&single), vec![0]);
        assert_eq!(compute_depths(&single), vec![0]);
        assert_eq!(lowest_known_descendant(&single, 0), 0);

        let chain = RoadNetwork::new(
            "s",
            &[
                ("s".into(), "x".into(), 5),
                ("x".into(), "g".into(), 7),
            ],
            MetricMode::Closure,
            &[
                ("s".into(), "x".into(), 5),
                ("x".into(), "g".into(), 7),
            ],
        )
        .unwrap();
        let t = compute_evader_times(&chain);
        assert_eq!(by_id(&chain, &t, "g"), 12);
        let d = compute_depths(&chain);
        assert_eq!(by_id(&chain, &d, "g"), 2);
        // whole chain is forced
        assert_eq!(
            lowest_known_descendant(&chain, chain.node_index("s").unwrap()),
            chain.node_index("g").unwrap()
        );
    }

    /// Tree shaped after the worked example: v1 root with children v2, v3, v4;
    /// v2->v5; v3->v6->v8; v8->{v9, v10}; v4->v7.
    fn forced_path_example() -> RoadNetwork {
        let edges: Vec<(String, String, i64)> = [
            ("v1", "v2"),
            ("v1", "v3"),
            ("v1", "v4"),
            ("v2", "v5"),
            ("v3", "v6"),
            ("v6", "v8"),
            ("v8", "v9"),
            ("v8", "v10"),
            ("v4", "v7"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string(), 1))
        .collect();
        let entries = edges.clone();
        let doc = serde_json::json!({
            "root": "v1",
            "edges": edges.iter().map(|(a, b, t)| serde_json::json!({"from": a, "to": b, "evader_time": t})).collect::<Vec<_>>(),
            "pursuer": {"mode": "closure", "entries": entries.iter().map(|(a, b, t)| serde_json::json!({"a": a, "b": b, "time": t})).collect::<Vec<_>>()},
        });
        load_instance(doc.to_string().as_bytes()).unwrap()
    }

    #[test]
    fn forced_descendants_follow_only_child_chains() {
        let net = forced_path_example();
        let l = |id: &str| {
            let v = net.node_index(id).unwrap();
            net.id(lowest_known_descendant(&net, v)).to_string()
        };
        assert_eq!(l("v3"), "v8");
        assert_eq!(l("v6"), "v8");
        assert_eq!(l("v8"), "v8");
        assert_eq!(l("v2"), "v5");
        assert_eq!(l("v4"), "v7");
        // a node with two children is its own forced descendant
        assert_eq!(l("v1"), "v1");
        // a leaf is its own forced descendant
        assert_eq!(l("v9"), "v9");
    }

    #[test]
    fn forced_descendant_is_idempotent_and_chain_is_unary() {
        let net = fixtures::t2();
        let labels = NodeLabels::structural(&net).unwrap();
        for v in 0..net.len() {
            let l = labels.lkd[v];
            assert_eq!(labels.lkd[l], l, "lkd(lkd(v)) = lkd(v)");
            assert!(labels.depth[l] >= labels.depth[v]);
            // every node on the chain from v to lkd(v), excluding the end,
            // has exactly one child
            let mut cur = v;
            while cur != l {
                assert_eq!(net.children(cur).len(), 1);
                cur = net.children(cur)[0].0;
            }
        }
    }

    #[test]
    fn t_is_monotone_along_root_paths() {
        let net = fixtures::t2();
        let t = compute_evader_times(&net);
        for path in net.paths_to_goals() {
            for w in path.windows(2) {
                assert!(t[w[0]] <= t[w[1]]);
            }
        }
    }
}
