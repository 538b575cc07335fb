//! Vertex/edge connectivity, minimum separating sets, and the
//! minimal-(edge-)connectivity predicates, with brute-force oracles.
//!
//! Fast paths: edge connectivity is the minimum over unit-capacity max-flows
//! from a fixed source; vertex connectivity uses the node-splitting
//! construction with sources ranging over a minimum-degree vertex and its
//! neighborhood. Both are cross-checked against exhaustive subset-removal
//! oracles in the test suite.

use crate::graph::{GraphError, SimpleGraph};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("operation undefined on the empty graph")]
    EmptyGraph,
    #[error("operation undefined on a graph with fewer than two vertices")]
    TrivialGraph,
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("complete graph has no separating set")]
    CompleteGraph,
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Enumeration and size limits for the expensive operations.
#[derive(Debug, Clone, Copy)]
pub struct AnalysisCaps {
    /// Largest graph `minimum_vertex_cuts` will enumerate.
    pub cut_vertex_cap: usize,
    /// Largest connectivity `minimum_vertex_cuts` will enumerate cuts for.
    pub cut_kappa_cap: usize,
    /// Vertex-count cap for the brute-force vertex connectivity oracle.
    pub brute_force_vertex_cap: usize,
    /// Edge-count cap for the brute-force edge connectivity oracle.
    pub brute_force_edge_cap: usize,
}

impl Default for AnalysisCaps {
    fn default() -> Self {
        AnalysisCaps {
            cut_vertex_cap: 64,
            cut_kappa_cap: 6,
            brute_force_vertex_cap: 12,
            brute_force_edge_cap: 20,
        }
    }
}

const INF: u32 = u32::MAX / 2;

/// Unit-capacity max flow on a dense residual matrix, stopping at `limit`.
fn max_flow(cap: &mut [Vec<u32>], s: usize, t: usize, limit: u32) -> u32 {
    let n = cap.len();
    let mut flow = 0;
    let mut parent = vec![usize::MAX; n];
    while flow < limit {
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        parent[s] = s;
        let mut queue = std::collections::VecDeque::from([s]);
        'bfs: while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if parent[v] == usize::MAX && cap[u][v] > 0 {
                    parent[v] = u;
                    if v == t {
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        if parent[t] == usize::MAX {
            break;
        }
        let mut bottleneck = INF;
        let mut v = t;
        while v != s {
            bottleneck = bottleneck.min(cap[parent[v]][v]);
            v = parent[v];
        }
        let mut v = t;
        while v != s {
            cap[parent[v]][v] -= bottleneck;
            cap[v][parent[v]] += bottleneck;
            v = parent[v];
        }
        flow += bottleneck;
    }
    flow
}

fn edge_capacity_matrix(graph: &SimpleGraph) -> Vec<Vec<u32>> {
    let n = graph.vertex_count();
    let mut cap = vec![vec![0u32; n]; n];
    for (u, v) in graph.edges() {
        cap[u][v] = 1;
        cap[v][u] = 1;
    }
    cap
}

/// Minimum number of edges whose removal disconnects the graph; 0 for
/// disconnected or single-vertex graphs.
pub fn edge_connectivity(graph: &SimpleGraph) -> Result<usize, ConnectivityError> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(ConnectivityError::EmptyGraph);
    }
    if n == 1 || !graph.is_connected() {
        return Ok(0);
    }
    let base = edge_capacity_matrix(graph);
    // A global minimum edge cut separates vertex 0 from some other vertex.
    let mut best = graph.min_degree().expect("non-empty") as u32;
    for t in 1..n {
        if best == 0 {
            break;
        }
        let mut cap = base.clone();
        best = best.min(max_flow(&mut cap, 0, t, best));
    }
    Ok(best as usize)
}

/// Node-split capacity matrix: `in(v) = 2v`, `out(v) = 2v + 1`.
fn split_capacity_matrix(graph: &SimpleGraph) -> Vec<Vec<u32>> {
    let n = graph.vertex_count();
    let mut cap = vec![vec![0u32; 2 * n]; 2 * n];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = 1;
    }
    for (u, v) in graph.edges() {
        cap[2 * u + 1][2 * v] = INF;
        cap[2 * v + 1][2 * u] = INF;
    }
    cap
}

fn local_vertex_connectivity(
    base: &[Vec<u32>],
    s: usize,
    t: usize,
    limit: u32,
) -> u32 {
    let mut cap = base.to_vec();
    cap[2 * s][2 * s + 1] = INF;
    cap[2 * t][2 * t + 1] = INF;
    max_flow(&mut cap, 2 * s + 1, 2 * t, limit)
}

/// Minimum number of vertices whose removal disconnects the graph;
/// `n - 1` for complete graphs, 0 for disconnected or 1-vertex graphs.
pub fn vertex_connectivity(graph: &SimpleGraph) -> Result<usize, ConnectivityError> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(ConnectivityError::EmptyGraph);
    }
    if n == 1 || !graph.is_connected() {
        return Ok(0);
    }
    if graph.is_complete() {
        return Ok(n - 1);
    }
    let base = split_capacity_matrix(graph);
    let min_deg_vertex = (0..n)
        .min_by_key(|&v| graph.degree(v))
        .expect("non-empty");
    // A minimum separating set misses some vertex in {v} ∪ N(v).
    let mut sources: Vec<usize> = vec![min_deg_vertex];
    sources.extend(graph.neighbors(min_deg_vertex));
    let mut best = graph.min_degree().expect("non-empty") as u32;
    for &s in &sources {
        for t in 0..n {
            if t == s || graph.has_edge(s, t) {
                continue;
            }
            if best == 0 {
                break;
            }
            best = best.min(local_vertex_connectivity(&base, s, t, best));
        }
    }
    Ok(best as usize)
}

/// Visits all `k`-subsets of `0..n` in lexicographic order until `f`
/// returns `false`.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        if !f(&subset) {
            return;
        }
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if subset[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

fn disconnects(graph: &SimpleGraph, removed_vertices: &[usize]) -> bool {
    let n = graph.vertex_count();
    let mut removed = vec![false; n];
    for &v in removed_vertices {
        removed[v] = true;
    }
    let Some(start) = (0..n).find(|&v| !removed[v]) else {
        return false;
    };
    let mut seen = removed.clone();
    seen[start] = true;
    let mut reached = 1;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for v in graph.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    reached < n - removed_vertices.len()
}

/// All vertex cuts of size κ, sorted canonically.
pub fn minimum_vertex_cuts(
    graph: &SimpleGraph,
    caps: &AnalysisCaps,
) -> Result<Vec<Vec<usize>>, ConnectivityError> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(ConnectivityError::EmptyGraph);
    }
    if graph.is_complete() {
        return Err(ConnectivityError::CompleteGraph);
    }
    if !graph.is_connected() {
        return Err(ConnectivityError::DisconnectedGraph);
    }
    if n > caps.cut_vertex_cap {
        return Err(ConnectivityError::CapExceeded(format!(
            "{n} vertices exceeds cut enumeration cap {}",
            caps.cut_vertex_cap
        )));
    }
    let kappa = vertex_connectivity(graph)?;
    if kappa > caps.cut_kappa_cap {
        return Err(ConnectivityError::CapExceeded(format!(
            "connectivity {kappa} exceeds cut enumeration cap {}",
            caps.cut_kappa_cap
        )));
    }
    let mut cuts = Vec::new();
    for_each_subset(n, kappa, |subset| {
        if disconnects(graph, subset) {
            cuts.push(subset.to_vec());
        }
        true
    });
    Ok(cuts)
}

/// Exhaustive vertex connectivity by subset removal, smallest size first.
pub fn brute_force_vertex_connectivity(
    graph: &SimpleGraph,
    cap: usize,
) -> Result<usize, ConnectivityError> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(ConnectivityError::EmptyGraph);
    }
    if n > cap {
        return Err(ConnectivityError::CapExceeded(format!(
            "{n} vertices exceeds brute-force cap {cap}"
        )));
    }
    if n == 1 || !graph.is_connected() {
        return Ok(0);
    }
    for k in 1..n.saturating_sub(1) {
        let mut found = false;
        for_each_subset(n, k, |subset| {
            if disconnects(graph, subset) {
                found = true;
                return false;
            }
            true
        });
        if found {
            return Ok(k);
        }
    }
    // No separating set: complete-graph convention.
    Ok(n - 1)
}

/// Exhaustive edge connectivity by edge-subset removal, smallest size first.
pub fn brute_force_edge_connectivity(
    graph: &SimpleGraph,
    edge_cap: usize,
) -> Result<usize, ConnectivityError> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(ConnectivityError::EmptyGraph);
    }
    let edges = graph.edges();
    if edges.len() > edge_cap {
        return Err(ConnectivityError::CapExceeded(format!(
            "{} edges exceeds brute-force cap {edge_cap}",
            edges.len()
        )));
    }
    if n == 1 || !graph.is_connected() {
        return Ok(0);
    }
    for k in 1..=edges.len() {
        let mut found = false;
        for_each_subset(edges.len(), k, |subset| {
            let mut pruned = graph.clone();
            for &i in subset {
                pruned = pruned.delete_edge(edges[i].0, edges[i].1).expect("edge");
            }
            if !pruned.is_connected() {
                found = true;
                return false;
            }
            true
        });
        if found {
            return Ok(k);
        }
    }
    unreachable!("removing all edges of a multi-vertex graph disconnects it")
}

/// Verdict of a minimality predicate; the witness is the lexicographically
/// smallest edge whose deletion fails to lower the connectivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinimalityVerdict {
    pub verdict: bool,
    pub witness_edge: Option<(usize, usize)>,
}

fn minimality_check(
    graph: &SimpleGraph,
    connectivity: fn(&SimpleGraph) -> Result<usize, ConnectivityError>,
) -> Result<MinimalityVerdict, ConnectivityError> {
    if graph.vertex_count() < 2 {
        return Err(ConnectivityError::TrivialGraph);
    }
    if !graph.is_connected() {
        return Err(ConnectivityError::DisconnectedGraph);
    }
    let base = connectivity(graph)?;
    for (u, v) in graph.edges() {
        let dropped = connectivity(&graph.delete_edge(u, v)?)?;
        // Deleting one edge lowers connectivity by at most one.
        assert!(dropped + 1 == base || dropped == base);
        if dropped == base {
            return Ok(MinimalityVerdict {
                verdict: false,
                witness_edge: Some((u, v)),
            });
        }
    }
    Ok(MinimalityVerdict {
        verdict: true,
        witness_edge: None,
    })
}

/// True iff deleting any edge lowers κ by exactly one.
pub fn is_minimally_connected(
    graph: &SimpleGraph,
) -> Result<MinimalityVerdict, ConnectivityError> {
    minimality_check(graph, vertex_connectivity)
}

/// True iff deleting any edge lowers κ′ by exactly one.
pub fn is_minimally_edge_connected(
    graph: &SimpleGraph,
) -> Result<MinimalityVerdict, ConnectivityError> {
    minimality_check(graph, edge_connectivity)
}

/// Minimality outcome for the JSON report; `verdict` is null when the
/// predicate's preconditions fail and `reason` says why.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MinimalityOutcome {
    pub verdict: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_edge: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl MinimalityOutcome {
    fn from_result(result: Result<MinimalityVerdict, ConnectivityError>) -> Self {
        match result {
            Ok(v) => MinimalityOutcome {
                verdict: Some(v.verdict),
                witness_edge: v.witness_edge,
                reason: None,
            },
            Err(e) => MinimalityOutcome {
                verdict: None,
                witness_edge: None,
                reason: Some(e.to_string()),
            },
        }
    }

    /// Not-applicable collapses to false when the verdict feeds an iff.
    pub fn holds(&self) -> bool {
        self.verdict == Some(true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConnectivityReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub min_degree: usize,
    pub vertex_connectivity: usize,
    pub edge_connectivity: usize,
    pub is_connected: bool,
    pub minimally_connected: MinimalityOutcome,
    pub minimally_edge_connected: MinimalityOutcome,
}

pub fn analyze(graph: &SimpleGraph) -> Result<ConnectivityReport, ConnectivityError> {
    if graph.vertex_count() == 0 {
        return Err(ConnectivityError::EmptyGraph);
    }
    Ok(ConnectivityReport {
        vertex_count: graph.vertex_count(),
        edge_count: graph.edge_count(),
        min_degree: graph.min_degree()?,
        vertex_connectivity: vertex_connectivity(graph)?,
        edge_connectivity: edge_connectivity(graph)?,
        is_connected: graph.is_connected(),
        minimally_connected: MinimalityOutcome::from_result(is_minimally_connected(graph)),
        minimally_edge_connected: MinimalityOutcome::from_result(is_minimally_edge_connected(
            graph,
        )),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_connectivities() {
        let k5 = SimpleGraph::complete(5);
        assert_eq!(vertex_connectivity(&k5).unwrap(), 4);
        assert_eq!(edge_connectivity(&k5).unwrap(), 4);
        let k4 = SimpleGraph::complete(4);
        assert_eq!(brute_force_vertex_connectivity(&k4, 12).unwrap(), 3);
        assert_eq!(brute_force_edge_connectivity(&k4, 20).unwrap(), 3);
    }

    #[test]
    fn cycle_connectivities() {
        let c5 = SimpleGraph::cycle(5);
        assert_eq!(vertex_connectivity(&c5).unwrap(), 2);
        assert_eq!(edge_connectivity(&c5).unwrap(), 2);
        assert_eq!(brute_force_vertex_connectivity(&c5, 12).unwrap(), 2);
        assert_eq!(brute_force_edge_connectivity(&c5, 20).unwrap(), 2);
    }

    #[test]
    fn star_has_bridges() {
        let star = SimpleGraph::star(7);
        assert_eq!(edge_connectivity(&star).unwrap(), 1);
        assert_eq!(vertex_connectivity(&star).unwrap(), 1);
    }

    #[test]
    fn degenerate_graphs() {
        assert_eq!(vertex_connectivity(&SimpleGraph::new(1)).unwrap(), 0);
        assert_eq!(edge_connectivity(&SimpleGraph::new(1)).unwrap(), 0);
        assert!(vertex_connectivity(&SimpleGraph::new(0)).is_err());
        let disconnected = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(vertex_connectivity(&disconnected).unwrap(), 0);
        assert_eq!(edge_connectivity(&disconnected).unwrap(), 0);
    }

    #[test]
    fn path_cut_is_middle_vertex() {
        let path = SimpleGraph::path(3);
        let cuts = minimum_vertex_cuts(&path, &AnalysisCaps::default()).unwrap();
        assert_eq!(cuts, vec![vec![1]]);
    }

    #[test]
    fn complete_graph_has_no_cuts() {
        let err = minimum_vertex_cuts(&SimpleGraph::complete(3), &AnalysisCaps::default());
        assert_eq!(err.unwrap_err(), ConnectivityError::CompleteGraph);
    }

    #[test]
    fn k4_minus_edge_cuts() {
        // Minimum cuts of K4 - e are exactly the two non-endpoints.
        let g = SimpleGraph::complete(4).delete_edge(0, 1).unwrap();
        let cuts = minimum_vertex_cuts(&g, &AnalysisCaps::default()).unwrap();
        assert_eq!(cuts, vec![vec![2, 3]]);
    }

    #[test]
    fn minimality_on_small_graphs() {
        let k2 = SimpleGraph::complete(2);
        assert!(is_minimally_connected(&k2).unwrap().verdict);
        assert!(is_minimally_edge_connected(&k2).unwrap().verdict);

        let star = SimpleGraph::star(3);
        assert!(is_minimally_connected(&star).unwrap().verdict);
        assert!(is_minimally_edge_connected(&star).unwrap().verdict);

        // A cycle keeps κ' = 2 only until one deletion; deleting any edge
        // leaves a path with κ' = 1, so C5 is minimally edge-connected.
        let c5 = SimpleGraph::cycle(5);
        assert!(is_minimally_edge_connected(&c5).unwrap().verdict);

        // K4 is not minimally connected: κ(K4 - e) = 2 = κ - 1 actually...
        // K4 has κ=3, K4-e has κ=2, so K4 IS minimally connected.
        assert!(is_minimally_connected(&SimpleGraph::complete(4)).unwrap().verdict);
    }

    #[test]
    fn minimality_preconditions() {
        assert_eq!(
            is_minimally_connected(&SimpleGraph::new(1)).unwrap_err(),
            ConnectivityError::TrivialGraph
        );
        let disconnected = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(
            is_minimally_connected(&disconnected).unwrap_err(),
            ConnectivityError::DisconnectedGraph
        );
    }

    #[test]
    fn minimality_witness_is_lex_smallest() {
        // Triangle with a pendant: deleting (0,1), (0,2) or (1,2) keeps κ'=1.
        let g = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]);
        let v = is_minimally_edge_connected(&g).unwrap();
        assert!(!v.verdict);
        assert_eq!(v.witness_edge, Some((0, 1)));
    }

    #[test]
    fn brute_force_caps() {
        let g = SimpleGraph::complete(13);
        assert!(matches!(
            brute_force_vertex_connectivity(&g, 12),
            Err(ConnectivityError::CapExceeded(_))
        ));
        assert!(matches!(
            brute_force_edge_connectivity(&g, 20),
            Err(ConnectivityError::CapExceeded(_))
        ));
    }

    #[test]
    fn analyze_k2() {
        let report = analyze(&SimpleGraph::complete(2)).unwrap();
        assert_eq!(report.min_degree, 1);
        assert_eq!(report.vertex_connectivity, 1);
        assert_eq!(report.edge_connectivity, 1);
        assert_eq!(report.minimally_connected.verdict, Some(true));
        assert_eq!(report.minimally_edge_connected.verdict, Some(true));
    }

    #[test]
    fn analyze_trivial_graph_not_applicable() {
        let report = analyze(&SimpleGraph::new(1)).unwrap();
        assert_eq!(report.minimally_connected.verdict, None);
        assert!(report.minimally_connected.reason.is_some());
    }

    #[test]
    fn report_json_field_names() {
        let report = analyze(&SimpleGraph::complete(2)).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        for key in [
            "vertexCount",
            "edgeCount",
            "minDegree",
            "vertexConnectivity",
            "edgeConnectivity",
            "isConnected",
            "minimallyConnected",
            "minimallyEdgeConnected",
        ] {
            assert!(json.get(key).is_some(), "missing key {key}");
        }
        assert_eq!(json["minimallyConnected"]["verdict"], true);
    }

    #[test]
    fn subset_enumeration_is_lexicographic() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| {
            seen.push(s.to_vec());
            true
        });
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
