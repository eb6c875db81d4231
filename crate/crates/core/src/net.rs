//! Road-network instances: a rooted DAG with per-edge evader travel times and
//! a full symmetric pursuer metric.
//!
//! The validator accepts any single-source DAG; the sweep solver additionally
//! requires a tree (see [`RoadNetwork::require_tree`]). Goal nodes are derived:
//! they are exactly the nodes with no outgoing edges, so a tree's goals are its
//! leaves and an internal goal is unrepresentable.

use std::collections::{BinaryHeap, HashMap};

use crate::error::{Error, Result};

/// Upper bound on any single travel time; keeps every sum the solvers form
/// comfortably inside `i64`.
pub const MAX_TIME: i64 = i64::MAX / 8;

/// Node count above which a non-tree "closure" pursuer specification is
/// rejected instead of densified into an n^2 matrix.
const DENSIFY_LIMIT: usize = 2048;

/// Node count up to which the validator re-checks the triangle inequality
/// exhaustively on derived (closure-mode) metrics. Explicit matrices are
/// always checked exhaustively; shortest-path closures satisfy the property
/// by construction.
const CLOSURE_TRIANGLE_CHECK_LIMIT: usize = 512;

/// How the pursuer metric was supplied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricMode {
    /// Full symmetric matrix given entry by entry.
    Matrix,
    /// Undirected weighted edge list; the metric is its shortest-path closure.
    Closure,
}

/// Full symmetric pursuer metric. Small instances hold a dense matrix; trees
/// whose closure entries coincide with the tree edges use path sums instead,
/// which keeps 10^5-node instances in O(n) memory.
#[derive(Debug, Clone)]
pub enum PursuerMetric {
    Dense {
        n: usize,
        d: Vec<i64>,
    },
    TreePaths {
        parent: Vec<Option<usize>>,
        depth: Vec<u32>,
        /// Pursuer distance from the root along tree edges.
        root_dist: Vec<i64>,
    },
}

impl PursuerMetric {
    pub fn dist(&self, u: usize, v: usize) -> i64 {
        match self {
            PursuerMetric::Dense { n, d } => d[u * n + v],
            PursuerMetric::TreePaths {
                parent,
                depth,
                root_dist,
            } => {
                if u == v {
                    return 0;
                }
                let (mut a, mut b) = (u, v);
                while depth[a] > depth[b] {
                    a = parent[a].expect("non-root node has a parent");
                }
                while depth[b] > depth[a] {
                    b = parent[b].expect("non-root node has a parent");
                }
                while a != b {
                    a = parent[a].expect("non-root node has a parent");
                    b = parent[b].expect("non-root node has a parent");
                }
                root_dist[u] + root_dist[v] - 2 * root_dist[a]
            }
        }
    }
}

/// A directed edge with its evader travel time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub evader_time: i64,
}

/// An immutable, validated pursuit-evasion instance.
#[derive(Debug, Clone)]
pub struct RoadNetwork {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    root: usize,
    edges: Vec<Edge>,
    /// Outgoing adjacency, sorted by child id.
    children: Vec<Vec<(usize, i64)>>,
    in_degree: Vec<usize>,
    /// Set iff the instance is a tree: unique parent and the evader time of
    /// the parent edge.
    parent: Vec<Option<(usize, i64)>>,
    is_tree: bool,
    goals: Vec<usize>,
    is_goal: Vec<bool>,
    metric: PursuerMetric,
    metric_mode: MetricMode,
}

impl RoadNetwork {
    /// Builds and validates an instance from raw parts. Node ids are interned
    /// in lexicographic order, so node indices are stable across loads of the
    /// same document.
    pub fn new(
        root_id: &str,
        edge_list: &[(String, String, i64)],
        pursuer_mode: MetricMode,
        pursuer_entries: &[(String, String, i64)],
    ) -> Result<RoadNetwork> {
        let mut ids: Vec<String> = Vec::new();
        ids.push(root_id.to_string());
        for (from, to, _) in edge_list {
            ids.push(from.clone());
            ids.push(to.clone());
        }
        ids.sort();
        ids.dedup();
        let n = ids.len();
        let index: HashMap<String, usize> =
            ids.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let root = index[root_id];

        let mut edges = Vec::with_capacity(edge_list.len());
        for (from, to, t) in edge_list {
            if from == to {
                return Err(Error::validation(format!(
                    "cycle: self-loop edge on node '{from}'"
                )));
            }
            if *t < 0 || *t > MAX_TIME {
                return Err(Error::validation(format!(
                    "evader time on edge '{from}'->'{to}' out of range"
                )));
            }
            edges.push(Edge {
                from: index[from],
                to: index[to],
                evader_time: *t,
            });
        }
        edges.sort_by_key(|e| (e.from, e.to));
        if edges.windows(2).any(|w| (w[0].from, w[0].to) == (w[1].from, w[1].to)) {
            return Err(Error::validation("duplicate edge in edge list".to_string()));
        }

        let mut children: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
        let mut in_degree = vec![0usize; n];
        for e in &edges {
            children[e.from].push((e.to, e.evader_time));
            in_degree[e.to] += 1;
        }
        // edges are sorted, so each children list is sorted by child index.

        if in_degree[root] != 0 {
            return Err(Error::validation(format!(
                "root '{}' has an incoming edge; the source must have none",
                ids[root]
            )));
        }
        for v in 0..n {
            if v != root && in_degree[v] == 0 {
                return Err(Error::validation(format!(
                    "multiple sources: node '{}' has no incoming edges",
                    ids[v]
                )));
            }
        }

        // Kahn toposort doubles as the cycle check.
        let mut remaining = in_degree.clone();
        let mut queue = vec![root];
        let mut seen = 0usize;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &(c, _) in &children[v] {
                remaining[c] -= 1;
                if remaining[c] == 0 {
                    queue.push(c);
                }
            }
        }
        if seen != n {
            return Err(Error::validation("cycle detected in road network".to_string()));
        }

        let is_tree = (0..n).all(|v| v == root || in_degree[v] == 1);
        let mut parent: Vec<Option<(usize, i64)>> = vec![None; n];
        if is_tree {
            for e in &edges {
                parent[e.to] = Some((e.from, e.evader_time));
            }
        }

        let is_goal: Vec<bool> = children.iter().map(|c| c.is_empty()).collect();
        let goals: Vec<usize> = (0..n).filter(|&v| is_goal[v]).collect();
        if is_goal[root] && n > 1 {
            // unreachable given the single-source check, kept as a guard
            return Err(Error::validation("root has no outgoing edges".to_string()));
        }

        let metric = build_metric(&ids, &index, n, root, &edges, &parent, is_tree, pursuer_mode, pursuer_entries)?;

        let net = RoadNetwork {
            ids,
            index,
            root,
            edges,
            children,
            in_degree,
            parent,
            is_tree,
            goals,
            is_goal,
            metric,
            metric_mode: pursuer_mode,
        };
        net.check_speed_advantage()?;
        Ok(net)
    }

    fn check_speed_advantage(&self) -> Result<()> {
        for e in &self.edges {
            let dp = self.metric.dist(e.from, e.to);
            if dp > e.evader_time {
                return Err(Error::validation(format!(
                    "pursuer slower than evader on edge '{}'->'{}': pursuer {} > evader {}",
                    self.ids[e.from], self.ids[e.to], dp, e.evader_time
                )));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn id(&self, v: usize) -> &str {
        &self.ids[v]
    }

    pub fn node_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Outgoing (child, evader time) pairs, sorted by child id.
    pub fn children(&self, v: usize) -> &[(usize, i64)] {
        &self.children[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_degree[v]
    }

    /// Unique parent edge in a tree instance.
    pub fn parent(&self, v: usize) -> Option<(usize, i64)> {
        self.parent[v]
    }

    pub fn is_tree(&self) -> bool {
        self.is_tree
    }

    pub fn require_tree(&self) -> Result<()> {
        if self.is_tree {
            Ok(())
        } else {
            Err(Error::validation(
                "instance is not a tree: some node has more than one parent".to_string(),
            ))
        }
    }

    pub fn goals(&self) -> &[usize] {
        &self.goals
    }

    pub fn is_goal(&self, v: usize) -> bool {
        self.is_goal[v]
    }

    pub fn pursuer_dist(&self, u: usize, v: usize) -> i64 {
        self.metric.dist(u, v)
    }

    pub fn metric(&self) -> &PursuerMetric {
        &self.metric
    }

    pub fn metric_mode(&self) -> MetricMode {
        self.metric_mode
    }

    /// All root-to-goal paths in deterministic (lexicographic) order. Works
    /// for DAGs as well as trees; intended for small instances.
    pub fn paths_to_goals(&self) -> Vec<Vec<usize>> {
        let mut paths = Vec::new();
        let mut stack = vec![self.root];
        self.collect_paths(&mut stack, &mut paths);
        paths
    }

    fn collect_paths(&self, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let v = *stack.last().unwrap();
        if self.is_goal[v] {
            out.push(stack.clone());
            return;
        }
        for &(c, _) in &self.children[v] {
            stack.push(c);
            self.collect_paths(stack, out);
            stack.pop();
        }
    }

    /// Evader arrival times along an explicit path starting at the root.
    /// Errors if the node list is not a root-to-goal path of this network.
    pub fn path_arrival_times(&self, path: &[usize]) -> Result<Vec<i64>> {
        if path.first() != Some(&self.root) {
            return Err(Error::validation("evader path must start at the root".to_string()));
        }
        let mut times = vec![0i64];
        for w in path.windows(2) {
            let (u, v) = (w[0], w[1]);
            match self.children[u].iter().find(|(c, _)| *c == v) {
                Some(&(_, t)) => times.push(times.last().unwrap() + t),
                None => {
                    return Err(Error::validation(format!(
                        "evader path uses missing edge '{}'->'{}'",
                        self.ids[u], self.ids[v]
                    )))
                }
            }
        }
        if !self.is_goal[*path.last().unwrap()] {
            return Err(Error::validation("evader path must end at a goal node".to_string()));
        }
        Ok(times)
    }

    /// Resolves a path given as node ids.
    pub fn resolve_path(&self, ids: &[&str]) -> Result<Vec<usize>> {
        ids.iter()
            .map(|s| {
                self.node_index(s)
                    .ok_or_else(|| Error::validation(format!("unknown node '{s}' in path")))
            })
            .collect()
    }
}

#[allow(clippy::too_many_arguments)]
fn build_metric(
    ids: &[String],
    index: &HashMap<String, usize>,
    n: usize,
    root: usize,
    edges: &[Edge],
    parent: &[Option<(usize, i64)>],
    is_tree: bool,
    mode: MetricMode,
    entries: &[(String, String, i64)],
) -> Result<PursuerMetric> {
    let mut pairs: Vec<(usize, usize, i64)> = Vec::with_capacity(entries.len());
    for (a, b, t) in entries {
        let ia = *index
            .get(a)
            .ok_or_else(|| Error::validation(format!("pursuer entry names unknown node '{a}'")))?;
        let ib = *index
            .get(b)
            .ok_or_else(|| Error::validation(format!("pursuer entry names unknown node '{b}'")))?;
        if *t < 0 || *t > MAX_TIME {
            return Err(Error::validation(format!(
                "pursuer time between '{a}' and '{b}' out of range"
            )));
        }
        pairs.push((ia, ib, *t));
    }

    match mode {
        MetricMode::Matrix => {
            let mut d = vec![-1i64; n * n];
            for v in 0..n {
                d[v * n + v] = 0;
            }
            for &(a, b, t) in &pairs {
                if a == b {
                    if t != 0 {
                        return Err(Error::validation(format!(
                            "pursuer matrix has nonzero diagonal at '{}'",
                            ids[a]
                        )));
                    }
                    continue;
                }
                for (x, y) in [(a, b), (b, a)] {
                    let cell = &mut d[x * n + y];
                    if *cell >= 0 && *cell != t {
                        return Err(Error::validation(format!(
                            "asymmetric pursuer matrix: d({},{}) given as both {} and {}",
                            ids[a], ids[b], *cell, t
                        )));
                    }
                    *cell = t;
                }
            }
            for u in 0..n {
                for v in 0..n {
                    if d[u * n + v] < 0 {
                        return Err(Error::validation(format!(
                            "pursuer matrix is missing the distance between '{}' and '{}'",
                            ids[u], ids[v]
                        )));
                    }
                }
            }
            check_triangle(ids, n, &d)?;
            Ok(PursuerMetric::Dense { n, d })
        }
        MetricMode::Closure => {
            // Tree fast path: entries that are exactly the tree's edges give a
            // path-sum metric without materializing the matrix.
            if is_tree {
                if let Some(metric) = tree_paths_metric(n, root, edges, parent, &pairs) {
                    return Ok(metric);
                }
            }
            if n > DENSIFY_LIMIT {
                return Err(Error::validation(format!(
                    "closure-mode pursuer graph with {n} nodes does not match the tree edges; \
                     general closure is limited to {DENSIFY_LIMIT} nodes"
                )));
            }
            let d = metric_closure_indexed(n, &pairs)?;
            if n <= CLOSURE_TRIANGLE_CHECK_LIMIT {
                check_triangle(ids, n, &d)?;
            }
            Ok(PursuerMetric::Dense { n, d })
        }
    }
}

/// Returns the path-sum metric when the undirected closure entries coincide
/// with the tree's edge set (one entry per tree edge, any weights).
fn tree_paths_metric(
    n: usize,
    root: usize,
    edges: &[Edge],
    parent: &[Option<(usize, i64)>],
    pairs: &[(usize, usize, i64)],
) -> Option<PursuerMetric> {
    if pairs.len() != edges.len() {
        return None;
    }
    let mut weight_to_parent: Vec<Option<i64>> = vec![None; n];
    for &(a, b, t) in pairs {
        let child = match (parent[a], parent[b]) {
            (Some((p, _)), _) if p == b => a,
            (_, Some((p, _))) if p == a => b,
            _ => return None,
        };
        if weight_to_parent[child].is_some() {
            return None; // duplicate entry for the same edge
        }
        weight_to_parent[child] = Some(t);
    }
    if (0..n).any(|v| v != root && weight_to_parent[v].is_none()) {
        return None;
    }

    let mut depth = vec![0u32; n];
    let mut root_dist = vec![0i64; n];
    let mut parents_only: Vec<Option<usize>> = vec![None; n];
    // children lists are not at hand here; expand from parent pointers in
    // topological order via repeated passes is wasteful, so walk edges sorted
    // by construction (a parent always precedes its child in a BFS order).
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut kids: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        if let Some((p, _)) = parent[v] {
            kids[p].push(v);
            parents_only[v] = Some(p);
        }
    }
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &c in &kids[v] {
            depth[c] = depth[v] + 1;
            root_dist[c] = root_dist[v] + weight_to_parent[c].unwrap();
            order.push(c);
        }
    }
    Some(PursuerMetric::TreePaths {
        parent: parents_only,
        depth,
        root_dist,
    })
}

fn check_triangle(ids: &[String], n: usize, d: &[i64]) -> Result<()> {
    for i in 0..n {
        for k in 0..n {
            let dik = d[i * n + k];
            for j in 0..n {
                if d[i * n + j] > dik + d[k * n + j] {
                    return Err(Error::validation(format!(
                        "triangle inequality violated: d({},{}) > d({},{}) + d({},{})",
                        ids[i], ids[j], ids[i], ids[k], ids[k], ids[j]
                    )));
                }
            }
        }
    }
    Ok(())
}

/// All-pairs shortest-path closure of an undirected weighted graph given as
/// `(u, v, time)` triples over string node ids. Returns the node ids in
/// lexicographic order together with the dense distance matrix (row-major).
pub fn metric_closure(
    entries: &[(String, String, i64)],
) -> Result<(Vec<String>, Vec<i64>)> {
    let mut ids: Vec<String> = entries
        .iter()
        .flat_map(|(a, b, _)| [a.clone(), b.clone()])
        .collect();
    ids.sort();
    ids.dedup();
    let n = ids.len();
    let index: HashMap<&str, usize> = ids.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let pairs: Vec<(usize, usize, i64)> = entries
        .iter()
        .map(|(a, b, t)| (index[a.as_str()], index[b.as_str()], *t))
        .collect();
    let d = metric_closure_indexed(n, &pairs)?;
    Ok((ids, d))
}

/// Dijkstra from every node. Zero-weight edges are allowed.
fn metric_closure_indexed(n: usize, pairs: &[(usize, usize, i64)]) -> Result<Vec<i64>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for &(a, b, t) in pairs {
        if t < 0 {
            return Err(Error::validation("negative pursuer edge weight".to_string()));
        }
        if a == b {
            continue;
        }
        adj[a].push((b, t));
        adj[b].push((a, t));
    }
    let mut d = vec![i64::MAX; n * n];
    for src in 0..n {
        let dist = &mut d[src * n..(src + 1) * n];
        dist[src] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(std::cmp::Reverse((0i64, src)));
        while let Some(std::cmp::Reverse((du, u))) = heap.pop() {
            if du > dist[u] {
                continue;
            }
            for &(v, w) in &adj[u] {
                let cand = du + w;
                if cand < dist[v] {
                    dist[v] = cand;
                    heap.push(std::cmp::Reverse((cand, v)));
                }
            }
        }
        if let Some(unreached) = dist.iter().position(|&x| x == i64::MAX) {
            return Err(Error::Disconnected(format!(
                "no pursuer route between nodes #{src} and #{unreached}"
            )));
        }
    }
    Ok(d)
}
