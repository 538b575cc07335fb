//! Power graph construction: vertices are group elements, and distinct
//! `u`, `v` are adjacent iff one is a power of the other.

use crate::graph::SimpleGraph;
use crate::groups::FiniteGroup;

/// The power graph of a finite group; vertex `i` is element `i`.
#[derive(Debug, Clone)]
pub struct PowerGraph {
    group: FiniteGroup,
    graph: SimpleGraph,
}

/// Adjacency from precomputed cyclic subgroups: `u ~ v` iff `v ∈ <u>` or
/// `u ∈ <v>`.
pub fn build_power_graph(group: &FiniteGroup) -> PowerGraph {
    let n = group.order();
    let subgroups: Vec<Vec<usize>> = (0..n).map(|x| group.cyclic_subgroup(x)).collect();
    let mut graph = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if subgroups[u].binary_search(&v).is_ok() || subgroups[v].binary_search(&u).is_ok() {
                graph.add_edge(u, v);
            }
        }
    }
    PowerGraph {
        group: group.clone(),
        graph: graph.with_labels(group.labels()),
    }
}

impl PowerGraph {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    /// The reduced graph: the power graph with the identity vertex deleted.
    /// Vertex `i` of the result is element `i + 1`.
    pub fn reduced_graph(&self) -> SimpleGraph {
        self.graph.delete_vertices(&[0]).expect("identity vertex")
    }
}
