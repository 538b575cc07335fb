//! Simple undirected graphs and the surgery the connectivity checks need.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("operation undefined on the empty graph")]
    EmptyGraph,
    #[error("edge ({0}, {1}) not in graph")]
    MissingEdge(usize, usize),
    #[error("vertex {0} not in graph")]
    MissingVertex(usize),
}

/// Simple undirected graph on vertices `0..n`, no self-loops.
///
/// Derived graphs (vertex deletions, induced subgraphs) renumber vertices
/// but carry the originals' labels, so a vertex can always be traced back
/// to its group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<BTreeSet<usize>>,
    labels: Option<Vec<String>>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraph {
            adj: vec![BTreeSet::new(); vertex_count],
            labels: None,
        }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.adj.len());
        self.labels = Some(labels);
        self
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loops are not allowed");
        assert!(u < self.adj.len() && v < self.adj.len());
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs.range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        self.adj
            .iter()
            .map(|s| s.len())
            .min()
            .ok_or(GraphError::EmptyGraph)
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        n <= 1 || self.edge_count() == n * (n - 1) / 2
    }

    pub fn is_regular(&self) -> bool {
        match self.adj.first() {
            None => true,
            Some(first) => self.adj.iter().all(|s| s.len() == first.len()),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Partition into maximal connected vertex sets, each sorted, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut component = vec![start];
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        component.push(v);
                        queue.push_back(v);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// Biconnected components by the iterative low-point algorithm. A bridge
    /// counts as a block of two vertices; isolated vertices yield no block.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut timer = 0usize;

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // Stack frame: (vertex, parent, neighbor iterator position).
            let mut stack: Vec<(usize, usize, Vec<usize>, usize)> = Vec::new();
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, self.adj[root].iter().copied().collect(), 0));
            while let Some(frame) = stack.last_mut() {
                let (u, parent, nbrs, pos) = (frame.0, frame.1, &frame.2, frame.3);
                if pos < nbrs.len() {
                    let v = nbrs[pos];
                    frame.3 += 1;
                    if v == parent {
                        continue;
                    }
                    if disc[v] == usize::MAX {
                        edge_stack.push((u, v));
                        disc[v] = timer;
                        low[v] = timer;
                        timer += 1;
                        stack.push((v, u, self.adj[v].iter().copied().collect(), 0));
                    } else if disc[v] < disc[u] {
                        edge_stack.push((u, v));
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    stack.pop();
                    if let Some(parent_frame) = stack.last_mut() {
                        let p = parent_frame.0;
                        low[p] = low[p].min(low[u]);
                        if low[u] >= disc[p] {
                            // (p, u) closes a block.
                            let mut members = BTreeSet::new();
                            while let Some(&(a, b)) = edge_stack.last() {
                                if disc[a] >= disc[u] {
                                    members.insert(a);
                                    members.insert(b);
                                    edge_stack.pop();
                                } else {
                                    break;
                                }
                            }
                            if let Some(&(a, b)) = edge_stack.last() {
                                if (a, b) == (p, u) {
                                    members.insert(a);
                                    members.insert(b);
                                    edge_stack.pop();
                                }
                            }
                            if !members.is_empty() {
                                blocks.push(members.into_iter().collect());
                            }
                        }
                    }
                }
            }
        }
        blocks.sort();
        blocks
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<SimpleGraph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let mut out = self.clone();
        out.adj[u].remove(&v);
        out.adj[v].remove(&u);
        Ok(out)
    }

    /// Induced subgraph on `keep` (deduplicated, sorted); labels follow the
    /// original vertices.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<SimpleGraph, GraphError> {
        let keep: BTreeSet<usize> = keep.iter().copied().collect();
        if let Some(&v) = keep.iter().find(|&&v| v >= self.vertex_count()) {
            return Err(GraphError::MissingVertex(v));
        }
        let order: Vec<usize> = keep.iter().copied().collect();
        let index_of = |v: usize| order.binary_search(&v).unwrap();
        let mut out = SimpleGraph::new(order.len());
        for &u in &order {
            for v in self.neighbors(u) {
                if v > u && keep.contains(&v) {
                    out.add_edge(index_of(u), index_of(v));
                }
            }
        }
        Ok(out.with_labels(order.iter().map(|&v| self.label(v)).collect()))
    }

    pub fn delete_vertices(&self, remove: &[usize]) -> Result<SimpleGraph, GraphError> {
        let remove: BTreeSet<usize> = remove.iter().copied().collect();
        if let Some(&v) = remove.iter().find(|&&v| v >= self.vertex_count()) {
            return Err(GraphError::MissingVertex(v));
        }
        let keep: Vec<usize> = (0..self.vertex_count())
            .filter(|v| !remove.contains(v))
            .collect();
        self.induced_subgraph(&keep)
    }

    /// DOT text: one node line per vertex, edges listed once, sorted.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for v in 0..self.vertex_count() {
            let _ = writeln!(out, "  {} [label=\"{}\"];", v, self.label(v));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    /// Adjacency-list text: one line per vertex, `i: j k l` with sorted
    /// neighbors.
    pub fn to_adjacency_list(&self) -> String {
        let mut out = String::new();
        for v in 0..self.vertex_count() {
            let nbrs: Vec<String> = self.neighbors(v).map(|u| u.to_string()).collect();
            let _ = writeln!(out, "{v}: {}", nbrs.join(" "));
        }
        out
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> SimpleGraph {
        assert!(n >= 3);
        let mut g = SimpleGraph::new(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_and_min_degree() {
        let g = SimpleGraph::star(3);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.min_degree().unwrap(), 1);
        assert!(SimpleGraph::new(0).min_degree().is_err());
    }

    #[test]
    fn completeness_and_regularity() {
        assert!(SimpleGraph::complete(5).is_complete());
        assert!(SimpleGraph::complete(1).is_complete());
        assert!(SimpleGraph::new(0).is_regular());
        assert!(SimpleGraph::cycle(4).is_regular());
        assert!(!SimpleGraph::star(3).is_regular());
    }

    #[test]
    fn components() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (2, 3)]);
        assert_eq!(
            g.connected_components(),
            vec![vec![0, 1], vec![2, 3], vec![4]]
        );
        assert!(!g.is_connected());
        assert!(SimpleGraph::star(3).is_connected());
    }

    #[test]
    fn blocks_of_star_and_complete() {
        let star = SimpleGraph::star(3);
        assert_eq!(star.blocks(), vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
        assert_eq!(SimpleGraph::complete(5).blocks().len(), 1);
    }

    #[test]
    fn blocks_two_triangles_sharing_a_vertex() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
        assert_eq!(g.blocks(), vec![vec![0, 1, 2], vec![0, 3, 4]]);
    }

    #[test]
    fn blocks_cover_all_edges() {
        let g = SimpleGraph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (0, 6)]);
        let blocks = g.blocks();
        let mut covered = 0;
        for b in &blocks {
            let sub = g.induced_subgraph(b).unwrap();
            covered += sub.edge_count();
        }
        assert_eq!(covered, g.edge_count());
        // Distinct blocks share at most one vertex.
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                let shared = blocks[i].iter().filter(|v| blocks[j].contains(v)).count();
                assert!(shared <= 1);
            }
        }
    }

    #[test]
    fn edge_deletion() {
        let g = SimpleGraph::complete(3);
        let p = g.delete_edge(0, 1).unwrap();
        assert_eq!(p.edge_count(), 2);
        assert!(p.is_connected());
        assert_eq!(g.delete_edge(0, 1).unwrap().delete_edge(0, 1), Err(GraphError::MissingEdge(0, 1)));
    }

    #[test]
    fn induced_subgraph_keeps_labels() {
        let g = SimpleGraph::complete(4)
            .with_labels(vec!["e".into(), "a".into(), "b".into(), "c".into()]);
        let sub = g.induced_subgraph(&[0, 2]).unwrap();
        assert_eq!(sub.vertex_count(), 2);
        assert_eq!(sub.edge_count(), 1);
        assert_eq!(sub.label(0), "e");
        assert_eq!(sub.label(1), "b");
        assert!(g.induced_subgraph(&[9]).is_err());
    }

    #[test]
    fn delete_vertices_disconnects() {
        // Path a-b-c loses its middle vertex.
        let g = SimpleGraph::path(3);
        let h = g.delete_vertices(&[1]).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn dot_output_shape() {
        let g = SimpleGraph::new(1);
        assert_eq!(g.to_dot(), "graph {\n  0 [label=\"0\"];\n}\n");
        let k2 = SimpleGraph::complete(2);
        assert!(k2.to_dot().contains("  0 -- 1;\n"));
    }
}
