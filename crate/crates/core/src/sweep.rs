//! Maximum pursuer delay over node-sweeping policies on tree networks.
//!
//! A node-sweeping pursuer resolves the eventual sensor state of every node
//! above depth k before it descends to depth k. Working up from the goals,
//! each node gets two labels: `D(v)`, the latest arrival at `v` that still
//! guarantees capture given the evader passes `v`, and `S(v)`, the latest
//! time a sweep of `v`'s sibling set may start at `v`. Goal nodes pin
//! `D = t`; sibling sets consisting solely of goals admit a closed-form `S`;
//! every other `S` is the best latest start over all sweep orders, each
//! evaluated as a time-window routing problem by [`latest_sweep_start`].
//! The answer is `D(root)`.

use crate::error::{Error, Result};
use crate::labels::NodeLabels;
use crate::net::RoadNetwork;
use crate::time::ExtTime;

/// A visit plan through ordered stops with inclusive time windows.
///
/// `windows[i]` is the `(lo, hi)` window of the i-th stop; `legs[i]` the
/// pursuer travel time from stop `i` ton stop `i + 1`.
#[derive(Debug, Clone)]
pub struct TimeWindowSeq {
    pub windows: Vec<(i64, i64)>,
    pub legs: Vec<i64>,
}

impl TimeWindowSeq {
    pub fn new(windows: Vec<(i64, i64)>, legs: Vec<i64>) -> TimeWindowSeq {
        assert!(!windows.is_empty());
        assert_eq!(legs.len(), windows.len() - 1);
        TimeWindowSeq { windows, legs }
    }
}

/// Latest time the pursuer can depart the first stop and still arrive inside
/// every window, visiting early stops no sooner than their window opens.
/// `NegInf` when no start time works.
///
/// Backward pass: the latest useful arrival at the final stop is its window
/// end; stepping back, the latest arrival at stop i is the smaller of its own
/// window end and the latest arrival at stop i+1 minus the leg between them.
/// If that ever undercuts a window start, no schedule exists: departure from
/// stop i cannot happen before `lo_i` no matter how early the pursuer starts.
pub fn latest_sweep_start(seq: &TimeWindowSeq) -> ExtTime {
    let mu = seq.windows.len();
    let mut tau = seq.windows[mu - 1].1;
    for i in (0..mu - 1).rev() {
        let cand = tau - seq.legs[i];
        if cand < seq.windows[i].0 {
            return ExtTime::NegInf;
        }
        tau = cand.min(seq.windows[i].1);
    }
    ExtTime::Finite(tau)
}

/// Where a sweep ends after all visited siblings read green.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepTerminal {
    /// Proceed to the unvisited last sibling itself (deadline `D`).
    LastSibling,
    /// Go directly to this child of the last sibling's forced descendant and
    /// start a sweep there (deadline `S`).
    ForcedChild(usize),
}

/// An ordered visit plan over one sibling set with its terminal target.
#[derive(Debug, Clone)]
pub struct NodeSweep {
    /// Siblings visited to resolve their state, in order; the first entry is
    /// the sweep's start node.
    pub visit: Vec<usize>,
    /// The one sibling left unvisited; once the rest read green its state is
    /// inferred red.
    pub last_sibling: usize,
    pub terminal: SweepTerminal,
    pub latest_start: ExtTime,
}

/// What the pursuer does from a node known (or inferred) to be on the
/// evader's path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Continuation {
    /// Move to this child of the forced descendant and run its sweep.
    SweepAt(usize),
    /// Move to the forced descendant and hold there until the evader arrives.
    Intercept(usize),
}

/// An executable node-sweeping policy: the argmax choices made while
/// computing the labels, plus the root entry deadline.
#[derive(Debug, Clone)]
pub struct SweepPolicy {
    pub entry_deadline: i64,
    continuations: Vec<Option<Continuation>>,
    sweeps: Vec<Option<NodeSweep>>,
}

impl SweepPolicy {
    pub fn continuation(&self, v: usize) -> Option<Continuation> {
        self.continuations[v]
    }

    pub fn sweep(&self, v: usize) -> Option<&NodeSweep> {
        self.sweeps[v].as_ref()
    }
}

/// Full solver output: the maximum entry delay, all labels, and the policy
/// realizing the delay.
#[derive(Debug, Clone)]
pub struct SweepSolution {
    pub max_delay: i64,
    pub labels: NodeLabels,
    pub policy: SweepPolicy,
}

/// Which terminal targets a sweep may end at. The reduced rule checks the
/// last sibling itself plus the children of its forced descendant; interior
/// nodes of the forced chain are dominated by the triangle inequality. The
/// full rule enumerates the whole chain as well and exists to validate that
/// equivalence in tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TerminalRule {
    Reduced,
    FullPath,
}

/// Maximum entry delay for node-sweeping policies (tree instances).
pub fn max_pursuer_delay_sweeping(net: &RoadNetwork) -> Result<SweepSolution> {
    solve(net, TerminalRule::Reduced)
}

#[cfg(any(test, feature = "internals"))]
pub fn max_pursuer_delay_sweeping_full_terminals(net: &RoadNetwork) -> Result<SweepSolution> {
    solve(net, TerminalRule::FullPath)
}

pub(crate) fn solve(net: &RoadNetwork, rule: TerminalRule) -> Result<SweepSolution> {
    net.require_tree()?;
    let n = net.len();
    let mut labels = NodeLabels::structural(net)?;
    let mut continuations: Vec<Option<Continuation>> = vec![None; n];
    let mut sweeps: Vec<Option<NodeSweep>> = vec![None; n];

    if n == 1 {
        // Degenerate instance: the root is the goal; only delay 0 captures.
        continuations[net.root()] = Some(Continuation::Intercept(net.root()));
        labels.latest_arrival[net.root()] = 0;
        return Ok(SweepSolution {
            max_delay: 0,
            labels,
            policy: SweepPolicy {
                entry_deadline: 0,
                continuations,
                sweeps,
            },
        });
    }

    for &g in net.goals() {
        labels.latest_arrival[g] = labels.t[g];
        continuations[g] = Some(Continuation::Intercept(g));
    }

    // Base cases: sibling sets consisting solely of goal nodes.
    let mut base_done = vec![false; n];
    for v in 0..n {
        if !net.is_goal(v) && net.children(v).iter().all(|&(c, _)| net.is_goal(c)) {
            goal_children_base_case(net, &mut labels, &mut sweeps, v);
            base_done[v] = true;
        }
    }

    let max_depth = *labels.depth.iter().max().unwrap() as usize;
    let mut by_depth: Vec<Vec<usize>> = vec![Vec::new(); max_depth + 1];
    for v in 0..n {
        by_depth[labels.depth[v] as usize].push(v);
    }

    for depth in (1..max_depth).rev() {
        for &v in &by_depth[depth] {
            if !net.is_goal(v) {
                let (d, cont) = compute_latest_arrival(net, &labels, v);
                labels.latest_arrival[v] = d;
                continuations[v] = Some(cont);
                debug_assert!(d >= labels.t[v]);
            }
        }
        for &v in &by_depth[depth] {
            let parent = net.parent(v).expect("non-root node").0;
            if base_done[parent] {
                continue;
            }
            let (s, sweep) = compute_latest_sweep_start(net, &labels, v, rule);
            labels.latest_sweep_start[v] = s;
            sweeps[v] = sweep;
        }
    }

    let root = net.root();
    let (delay, cont) = compute_latest_arrival(net, &labels, root);
    labels.latest_arrival[root] = delay;
    continuations[root] = Some(cont);
    debug_assert!(delay >= 0, "entry deadline is never negative");

    let policy = SweepPolicy {
        entry_deadline: delay,
        continuations,
        sweeps,
    };
    extract_policy(net, &policy)?;
    Ok(SweepSolution {
        max_delay: delay,
        labels,
        policy,
    })
}

/// Latest pursuer arrival at a non-goal node `v`: the pursuer heads straight
/// for the best child of the forced descendant to start a sweep there, or,
/// when no child sweep can succeed, intercepts at the forced descendant
/// before the evader passes it.
fn compute_latest_arrival(net: &RoadNetwork, labels: &NodeLabels, v: usize) -> (i64, Continuation) {
    let fd = labels.lkd[v];
    let mut best: Option<(i64, usize)> = None;
    for &(w, _) in net.children(fd) {
        if let ExtTime::Finite(sw) = labels.latest_sweep_start[w] {
            let cand = sw - net.pursuer_dist(v, w);
            if best.map_or(true, |(b, _)| cand > b) {
                best = Some((cand, w));
            }
        }
    }
    match best {
        Some((val, w)) => (val, Continuation::SweepAt(w)),
        None => (
            labels.t[fd] - net.pursuer_dist(v, fd),
            Continuation::Intercept(fd),
        ),
    }
}

/// Closed-form sweep starts when all children of `v` are goals. Sorted by
/// arrival time, the sweep must ride the evader's schedule exactly: each hop
/// has to fit inside the arrival-time gap. If every consecutive hop fits,
/// sweeps can only start at the earliest-arrival children (which tie at the
/// same time and zero pursuer distance); otherwise no sweep works at all.
fn goal_children_base_case(
    net: &RoadNetwork,
    labels: &mut NodeLabels,
    sweeps: &mut Vec<Option<NodeSweep>>,
    v: usize,
) {
    let mut order: Vec<usize> = net.children(v).iter().map(|&(c, _)| c).collect();
    order.sort_by_key(|&c| labels.t[c]); // stable: id order within equal t
    let feasible = order
        .windows(2)
        .all(|w| net.pursuer_dist(w[0], w[1]) <= labels.t[w[1]] - labels.t[w[0]]);
    if !feasible {
        for &c in &order {
            labels.latest_sweep_start[c] = ExtTime::NegInf;
        }
        return;
    }
    let earliest = labels.t[order[0]];
    for (i, &c) in order.iter().enumerate() {
        if labels.t[c] != earliest {
            labels.latest_sweep_start[c] = ExtTime::NegInf;
            continue;
        }
        labels.latest_sweep_start[c] = ExtTime::Finite(earliest);
        if order.len() >= 2 {
            let mut visit = vec![c];
            visit.extend(order.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &u)| u));
            let last = visit.pop().expect("two or more children");
            sweeps[c] = Some(NodeSweep {
                visit,
                last_sibling: last,
                terminal: SweepTerminal::LastSibling,
                latest_start: ExtTime::Finite(earliest),
            });
        }
    }
}

/// Latest sweep start at `v` over all sweeps of its sibling set that begin at
/// `v`, per-sweep value by [`latest_sweep_start`]. Visited siblings carry
/// windows `[t, D]`; the terminal window opens at zero. Ties prefer the
/// lexicographically first visit order and the last-sibling terminal.
fn compute_latest_sweep_start(
    net: &RoadNetwork,
    labels: &NodeLabels,
    v: usize,
    rule: TerminalRule,
) -> (ExtTime, Option<NodeSweep>) {
    let parent = net.parent(v).expect("non-root node").0;
    let siblings: Vec<usize> = net.children(parent).iter().map(|&(c, _)| c).collect();
    if siblings.len() == 1 {
        // No siblings: starting a sweep at v is just arriving at v.
        return (ExtTime::Finite(labels.latest_arrival[v]), None);
    }

    let others: Vec<usize> = siblings.iter().copied().filter(|&u| u != v).collect();
    let mut best = ExtTime::NegInf;
    let mut best_sweep: Option<NodeSweep> = None;

    let mut perm: Vec<usize> = Vec::with_capacity(others.len());
    let mut used = vec![false; others.len()];
    permute_in_lex_order(&others, &mut perm, &mut used, &mut |perm| {
        let (visited_rest, last) = perm.split_at(perm.len() - 1);
        let last = last[0];
        let mut visit = Vec::with_capacity(perm.len());
        visit.push(v);
        visit.extend_from_slice(visited_rest);

        let mut windows: Vec<(i64, i64)> = visit
            .iter()
            .map(|&u| (labels.t[u], labels.latest_arrival[u]))
            .collect();
        windows.push((0, 0)); // terminal window filled per target below
        let mut legs: Vec<i64> = visit
            .windows(2)
            .map(|w| net.pursuer_dist(w[0], w[1]))
            .collect();
        legs.push(0);
        let from = *visit.last().unwrap();

        let mut try_terminal = |target: usize, hi: i64, terminal: SweepTerminal,
                                best: &mut ExtTime,
                                best_sweep: &mut Option<NodeSweep>| {
            *windows.last_mut().unwrap() = (0, hi);
            *legs.last_mut().unwrap() = net.pursuer_dist(from, target);
            let val = latest_sweep_start(&TimeWindowSeq {
                windows: windows.clone(),
                legs: legs.clone(),
            });
            if val.is_finite() && val > *best {
                *best = val;
                *best_sweep = Some(NodeSweep {
                    visit: visit.clone(),
                    last_sibling: last,
                    terminal,
                    latest_start: val,
                });
            }
        };

        match rule {
            TerminalRule::Reduced => {
                try_terminal(
                    last,
                    labels.latest_arrival[last],
                    SweepTerminal::LastSibling,
                    &mut best,
                    &mut best_sweep,
                );
            }
            TerminalRule::FullPath => {
                // every node on the forced chain from the last sibling
                let mut z = last;
                loop {
                    try_terminal(
                        z,
                        labels.latest_arrival[z],
                        SweepTerminal::LastSibling,
                        &mut best,
                        &mut best_sweep,
                    );
                    if z == labels.lkd[last] {
                        break;
                    }
                    z = net.children(z)[0].0;
                }
            }
        }
        for &(w, _) in net.children(labels.lkd[last]) {
            if let ExtTime::Finite(sw) = labels.latest_sweep_start[w] {
                try_terminal(w, sw, SweepTerminal::ForcedChild(w), &mut best, &mut best_sweep);
            }
        }
    });

    (best, best_sweep)
}

fn permute_in_lex_order(
    items: &[usize],
    perm: &mut Vec<usize>,
    used: &mut [bool],
    f: &mut impl FnMut(&[usize]),
) {
    if perm.len() == items.len() {
        f(perm);
        return;
    }
    for i in 0..items.len() {
        if !used[i] {
            used[i] = true;
            perm.push(items[i]);
            permute_in_lex_order(items, perm, used, f);
            perm.pop();
            used[i] = false;
        }
    }
}

/// Checks that every decision reachable from the root entry is recorded, so
/// the policy is executable against any evader path.
pub fn extract_policy<'a>(net: &RoadNetwork, policy: &'a SweepPolicy) -> Result<&'a SweepPolicy> {
    let mut seen = vec![false; net.len()];
    let mut stack = vec![net.root()];
    while let Some(v) = stack.pop() {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        match policy.continuation(v) {
            None => {
                return Err(Error::PolicyUnavailable(format!(
                    "no continuation recorded for red node '{}'",
                    net.id(v)
                )))
            }
            Some(Continuation::Intercept(_)) => {}
            Some(Continuation::SweepAt(w)) => push_sweep(net, policy, w, &mut stack)?,
        }
    }
    Ok(policy)
}

fn push_sweep(
    net: &RoadNetwork,
    policy: &SweepPolicy,
    w: usize,
    stack: &mut Vec<usize>,
) -> Result<()> {
    let sweep = policy.sweep(w).ok_or_else(|| {
        Error::PolicyUnavailable(format!("no sweep recorded for start node '{}'", net.id(w)))
    })?;
    for &u in &sweep.visit {
        stack.push(u); // red at a visited sibling hands control to u
    }
    match sweep.terminal {
        SweepTerminal::LastSibling => stack.push(sweep.last_sibling),
        SweepTerminal::ForcedChild(c) => push_sweep(net, policy, c, stack)?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn seq(windows: &[(i64, i64)], legs: &[i64]) -> TimeWindowSeq {
        TimeWindowSeq::new(windows.to_vec(), legs.to_vec())
    }

    #[test]
    fn latest_start_single_stop_is_window_end() {
        assert_eq!(latest_sweep_start(&seq(&[(2, 8)], &[])), ExtTime::Finite(8));
    }

    #[test]
    fn latest_start_detects_infeasible_pair() {
        // reaching the second stop by 3 forces leaving the first by -2
        assert_eq!(
            latest_sweep_start(&seq(&[(0, 10), (0, 3)], &[5])),
            ExtTime::NegInf
        );
    }

    #[test]
    fn latest_start_t2_pair() {
        assert_eq!(
            latest_sweep_start(&seq(&[(2, 4), (0, 8)], &[3])),
            ExtTime::Finite(4)
        );
    }

    /// Forward oracle: largest integer start (arrival at the first stop) for
    /// which greedy execution meets every window.
    fn brute_force_latest_start(s: &TimeWindowSeq) -> ExtTime {
        let hi0 = s.windows[0].1;
        for start in (0..=hi0.max(0)).rev() {
            let mut at = start;
            let mut ok = true;
            for i in 0..s.windows.len() {
                if at > s.windows[i].1 {
                    ok = false;
                    break;
                }
                let depart = at.max(s.windows[i].0);
                if i + 1 < s.windows.len() {
                    at = depart + s.legs[i];
                }
            }
            if ok {
                return ExtTime::Finite(start);
            }
        }
        ExtTime::NegInf
    }

    #[test]
    fn latest_start_matches_forward_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..400 {
            let mu = rng.gen_range(1..=6);
            let windows: Vec<(i64, i64)> = (0..mu)
                .map(|_| {
                    let lo = rng.gen_range(0..=30);
                    (lo, rng.gen_range(lo..=30))
                })
                .collect();
            let legs: Vec<i64> = (0..mu - 1).map(|_| rng.gen_range(0..=30)).collect();
            let s = seq(&windows, &legs);
            assert_eq!(
                latest_sweep_start(&s),
                brute_force_latest_start(&s),
                "windows {windows:?} legs {legs:?}"
            );
        }
    }

    fn label_of<'a, T: Copy>(net: &RoadNetwork, xs: &'a [T], id: &str) -> T {
        xs[net.node_index(id).unwrap()]
    }

    use crate::net::{MetricMode, RoadNetwork};

    #[test]
    fn t2_labels_match_hand_derivation() {
        let net = fixtures::t2();
        let sol = max_pursuer_delay_sweeping(&net).unwrap();
        assert_eq!(sol.max_delay, 2);
        for (id, d) in [("s", 2), ("a", 4), ("b", 8), ("g1", 8), ("g2", 12)] {
            assert_eq!(label_of(&net, &sol.labels.latest_arrival, id), d, "D({id})");
        }
        assert_eq!(
            label_of(&net, &sol.labels.latest_sweep_start, "a"),
            ExtTime::Finite(4)
        );
        assert_eq!(
            label_of(&net, &sol.labels.latest_sweep_start, "b"),
            ExtTime::NegInf
        );
        // an only child starts its "sweep" whenever it arrives
        assert_eq!(
            label_of(&net, &sol.labels.latest_sweep_start, "g1"),
            ExtTime::Finite(8)
        );
        assert_eq!(
            label_of(&net, &sol.labels.latest_sweep_start, "g2"),
            ExtTime::Finite(12)
        );
    }

    #[test]
    fn t1_has_no_positive_delay() {
        assert_eq!(max_pursuer_delay_sweeping(&fixtures::t1()).unwrap().max_delay, 0);
    }

    #[test]
    fn s1_delay_is_four() {
        assert_eq!(max_pursuer_delay_sweeping(&fixtures::s1()).unwrap().max_delay, 4);
    }

    #[test]
    fn t2_policy_structure() {
        let net = fixtures::t2();
        let sol = max_pursuer_delay_sweeping(&net).unwrap();
        let ix = |id: &str| net.node_index(id).unwrap();
        assert_eq!(
            sol.policy.continuation(ix("s")),
            Some(Continuation::SweepAt(ix("a")))
        );
        assert_eq!(
            sol.policy.continuation(ix("a")),
            Some(Continuation::Intercept(ix("g1")))
        );
        assert_eq!(
            sol.policy.continuation(ix("b")),
            Some(Continuation::Intercept(ix("g2")))
        );
        let sweep = sol.policy.sweep(ix("a")).unwrap();
        assert_eq!(sweep.visit, vec![ix("a")]);
        assert_eq!(sweep.last_sibling, ix("b"));
        assert_eq!(sweep.terminal, SweepTerminal::LastSibling);
        assert_eq!(sweep.latest_start, ExtTime::Finite(4));
    }

    #[test]
    fn chain_policy_goes_straight_to_goal() {
        let edges: Vec<(String, String, i64)> = vec![
            ("s".into(), "x".into(), 5),
            ("x".into(), "g".into(), 7),
        ];
        let net = RoadNetwork::new("s", &edges, MetricMode::Closure, &edges).unwrap();
        let sol = max_pursuer_delay_sweeping(&net).unwrap();
        // direct interception: t(g) - d_p(s, g)
        assert_eq!(sol.max_delay, 12 - 12);
        let ix = |id: &str| net.node_index(id).unwrap();
        assert_eq!(
            sol.policy.continuation(ix("s")),
            Some(Continuation::Intercept(ix("g")))
        );
    }

    fn goal_fan_instance() -> RoadNetwork {
        // root -> p (2), p -> three goals arriving at t = 4, 7, 9 with pursuer
        // hops 3 and 2 between consecutive goals.
        let edges: Vec<(String, String, i64)> = vec![
            ("s".into(), "p".into(), 2),
            ("p".into(), "c1".into(), 2),
            ("p".into(), "c2".into(), 5),
            ("p".into(), "c3".into(), 7),
        ];
        let pursuer: Vec<(String, String, i64)> = vec![
            ("s".into(), "p".into(), 2),
            ("p".into(), "c1".into(), 2),
            ("p".into(), "c2".into(), 5),
            ("p".into(), "c3".into(), 7),
            ("c1".into(), "c2".into(), 3),
            ("c2".into(), "c3".into(), 2),
            ("c1".into(), "c3".into(), 5),
        ];
        RoadNetwork::new("s", &edges, MetricMode::Closure, &pursuer).unwrap()
    }

    #[test]
    fn goal_fan_base_case_marks_only_earliest_child() {
        let net = goal_fan_instance();
        let sol = max_pursuer_delay_sweeping(&net).unwrap();
        assert_eq!(
            label_of(&net, &sol.labels.latest_sweep_start, "c1"),
            ExtTime::Finite(4)
        );
        assert_eq!(
            label_of(&net, &sol.labels.latest_sweep_start, "c2"),
            ExtTime::NegInf
        );
        assert_eq!(
            label_of(&net, &sol.labels.latest_sweep_start, "c3"),
            ExtTime::NegInf
        );
    }

    #[test]
    fn goal_fan_infeasible_when_hop_exceeds_gap() {
        // two goals at t = 4 and 7 but a pursuer hop of 5 between them
        let edges: Vec<(String, String, i64)> = vec![
            ("s".into(), "p".into(), 2),
            ("p".into(), "c1".into(), 2),
            ("p".into(), "c2".into(), 5),
        ];
        let pursuer: Vec<(String, String, i64)> = vec![
            ("s".into(), "p".into(), 2),
            ("p".into(), "c1".into(), 2),
            ("p".into(), "c2".into(), 5),
            ("c1".into(), "c2".into(), 5),
        ];
        let net = RoadNetwork::new("s", &edges, MetricMode::Closure, &pursuer).unwrap();
        let sol = max_pursuer_delay_sweeping(&net).unwrap();
        assert_eq!(
            label_of(&net, &sol.labels.latest_sweep_start, "c1"),
            ExtTime::NegInf
        );
        assert_eq!(
            label_of(&net, &sol.labels.latest_sweep_start, "c2"),
            ExtTime::NegInf
        );
    }

    #[test]
    fn equal_arrival_goals_with_zero_hop_both_start_sweeps() {
        let edges: Vec<(String, String, i64)> = vec![
            ("s".into(), "p".into(), 2),
            ("p".into(), "c1".into(), 4),
            ("p".into(), "c2".into(), 4),
        ];
        let pursuer: Vec<(String, String, i64)> = vec![
            ("s".into(), "p".into(), 2),
            ("p".into(), "c1".into(), 4),
            ("p".into(), "c2".into(), 4),
            ("c1".into(), "c2".into(), 0),
        ];
        let net = RoadNetwork::new("s", &edges, MetricMode::Closure, &pursuer).unwrap();
        let sol = max_pursuer_delay_sweeping(&net).unwrap();
        assert_eq!(
            label_of(&net, &sol.labels.latest_sweep_start, "c1"),
            ExtTime::Finite(6)
        );
        assert_eq!(
            label_of(&net, &sol.labels.latest_sweep_start, "c2"),
            ExtTime::Finite(6)
        );
    }

    #[test]
    fn label_invariants_hold_on_fixtures() {
        for net in [fixtures::t1(), fixtures::t2(), fixtures::s1()] {
            let sol = max_pursuer_delay_sweeping(&net).unwrap();
            for v in 0..net.len() {
                assert!(sol.labels.latest_arrival[v] >= sol.labels.t[v]);
                if let ExtTime::Finite(s) = sol.labels.latest_sweep_start[v] {
                    assert!(sol.labels.t[v] <= s && s <= sol.labels.latest_arrival[v]);
                }
            }
            for &g in net.goals() {
                assert_eq!(sol.labels.latest_arrival[g], sol.labels.t[g]);
            }
        }
    }

    #[test]
    fn single_node_instance_solves_to_zero() {
        let net = RoadNetwork::new("s", &[], MetricMode::Matrix, &[]).unwrap();
        let sol = max_pursuer_delay_sweeping(&net).unwrap();
        assert_eq!(sol.max_delay, 0);
    }
}
