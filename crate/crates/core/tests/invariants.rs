//! Cross-module invariants checked on randomized inputs: the Whitney chain,
//! oracle equivalence for the fast connectivity algorithms, and arithmetic
//! identities on group elements.

use proptest::prelude::*;

use powergraph_core::connectivity::{
    brute_force_edge_connectivity, brute_force_vertex_connectivity, edge_connectivity,
    is_minimally_connected, is_minimally_edge_connected, vertex_connectivity,
};
use powergraph_core::graph::SimpleGraph;
use powergraph_core::groups::{
    self, euler_totient, from_permutation_generators, FiniteGroup, GroupSpec,
};
use powergraph_core::powergraph::build_power_graph;
use powergraph_core::theorems::totient_degree_identity_holds;

/// Arbitrary simple graph on 2..=9 vertices encoded as an edge bitmask.
fn arb_graph() -> impl Strategy<Value = SimpleGraph> {
    (2usize..=9).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << pairs)).prop_map(|(n, mask)| {
            let mut g = SimpleGraph::new(n);
            let mut bit = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if mask >> bit & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    bit += 1;
                }
            }
            g
        })
    })
}

/// Small catalog-style groups for element-level identities.
fn arb_group() -> impl Strategy<Value = FiniteGroup> {
    prop_oneof![
        (1usize..=16).prop_map(groups::cyclic),
        (2usize..=8).prop_map(|n| groups::dihedral(n).unwrap()),
        prop_oneof![Just((2usize, 2u32)), Just((2, 3)), Just((3, 2)), Just((5, 2))]
            .prop_map(|(p, r)| groups::elementary_abelian(p, r).unwrap()),
        prop_oneof![Just(8usize), Just(16)]
            .prop_map(|n| groups::generalized_quaternion(n).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// κ ≤ κ′ ≤ δ on every graph with at least two vertices.
    #[test]
    fn whitney_chain(g in arb_graph()) {
        let kappa = vertex_connectivity(&g).unwrap();
        let lambda = edge_connectivity(&g).unwrap();
        let delta = g.min_degree().unwrap();
        prop_assert!(kappa <= lambda);
        prop_assert!(lambda <= delta);
    }

    /// The fast flow-based algorithms agree with exhaustive subset removal.
    #[test]
    fn oracle_equivalence(g in arb_graph()) {
        prop_assert_eq!(
            vertex_connectivity(&g).unwrap(),
            brute_force_vertex_connectivity(&g, 12).unwrap()
        );
        prop_assert_eq!(
            edge_connectivity(&g).unwrap(),
            brute_force_edge_connectivity(&g, 40).unwrap()
        );
    }

    /// Deleting a minimality witness edge must keep the connectivity value.
    #[test]
    fn minimality_witness_is_sound(g in arb_graph()) {
        if g.is_connected() {
            if let Ok(v) = is_minimally_edge_connected(&g) {
                if let Some((a, b)) = v.witness_edge {
                    let pruned = g.delete_edge(a, b).unwrap();
                    prop_assert_eq!(
                        edge_connectivity(&pruned).unwrap(),
                        edge_connectivity(&g).unwrap()
                    );
                }
            }
            if let Ok(v) = is_minimally_connected(&g) {
                if let Some((a, b)) = v.witness_edge {
                    let pruned = g.delete_edge(a, b).unwrap();
                    prop_assert_eq!(
                        vertex_connectivity(&pruned).unwrap(),
                        vertex_connectivity(&g).unwrap()
                    );
                }
            }
        }
    }

    /// |[x]| = φ(o(x)) and o(x) divides both exponent and |G|.
    #[test]
    fn element_identities(g in arb_group(), seed in 0usize..1000) {
        let x = seed % g.order();
        let o = g.element_order(x);
        prop_assert_eq!(g.generator_class(x).len(), euler_totient(o));
        prop_assert_eq!(g.cyclic_subgroup(x).len(), o);
        prop_assert_eq!(g.exponent() % o, 0);
        prop_assert_eq!(g.order() % o, 0);
    }

    /// deg(x) in the power graph is at least o(x) − 1 (x sees all of ⟨x⟩∖{x}).
    #[test]
    fn power_graph_degree_lower_bound(g in arb_group(), seed in 0usize..1000) {
        let x = seed % g.order();
        let pg = build_power_graph(&g);
        prop_assert!(pg.graph().degree(x) + 1 >= g.element_order(x));
    }

    /// Blocks partition the edge set and pairwise share at most one vertex.
    #[test]
    fn blocks_cover_edges(g in arb_graph()) {
        let blocks = g.blocks();
        let mut covered = 0usize;
        for block in &blocks {
            let sub = g.induced_subgraph(block).unwrap();
            covered += sub.edge_count();
        }
        prop_assert_eq!(covered, g.edge_count());
    }
}

fn relabelled_table(g: &FiniteGroup, perm: &[usize]) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut pos = vec![0usize; n];
    for (new, &old) in perm.iter().enumerate() {
        pos[old] = new;
    }
    (0..n)
        .map(|a| (0..n).map(|b| pos[g.mul(perm[a], perm[b])]).collect())
        .collect()
}

/// Canonical form: elements sorted by order first, then the
/// lexicographically smallest table over relabelings within each order
/// class. Two groups are isomorphic iff their canonical tables are equal;
/// only usable for small orders (factorial in the class sizes).
fn canonical_table(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut base: Vec<usize> = (0..n).collect();
    base.sort_by_key(|&x| (g.element_order(x), x));
    // Enumerate permutations that keep the order-sorted class boundaries.
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &x in &base {
        match classes.last_mut() {
            Some(c) if g.element_order(c[0]) == g.element_order(x) => c.push(x),
            _ => classes.push(vec![x]),
        }
    }
    let mut best: Option<Vec<Vec<usize>>> = None;
    fn rec(
        g: &FiniteGroup,
        classes: &[Vec<usize>],
        i: usize,
        prefix: &mut Vec<usize>,
        best: &mut Option<Vec<Vec<usize>>>,
    ) {
        if i == classes.len() {
            let table = relabelled_table(g, prefix);
            if best.as_ref().is_none_or(|b| table < *b) {
                *best = Some(table);
            }
            return;
        }
        let mut class = classes[i].clone();
        permute(&mut class, 0, &mut |ordering| {
            prefix.extend_from_slice(ordering);
            rec(g, classes, i + 1, prefix, best);
            prefix.truncate(prefix.len() - ordering.len());
        });
    }
    fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, f);
            items.swap(k, i);
        }
    }
    rec(g, &classes, 0, &mut Vec::new(), &mut best);
    best.expect("at least one relabeling")
}

#[test]
fn s3_generators_match_dihedral_3() {
    let from_gens = from_permutation_generators(&["(1 2)", "(1 2 3)"], 64).unwrap();
    let d3 = groups::dihedral(3).unwrap();
    assert_eq!(canonical_table(&from_gens), canonical_table(&d3));
}

#[test]
fn spec_strings_round_trip() {
    for text in [
        "cyclic 6",
        "elementary_abelian 3 2",
        "dihedral 4",
        "symmetric 4",
        "generalized_quaternion 16",
        "heisenberg 3",
        "direct_product cyclic:2 cyclic:4",
    ] {
        let spec = GroupSpec::parse(text).unwrap();
        assert_eq!(spec.to_string(), text);
        assert!(spec.build().unwrap().order() > 0);
    }
}

#[test]
fn totient_degree_identity_on_prime_square_cyclic() {
    // Z_{p²} is the formula's habitat: ⟨x⟩ of order p sits at index p in
    // the unique maximal cyclic subgroup.
    for p in [2usize, 3, 5] {
        let g = groups::cyclic(p * p);
        for x in (0..g.order()).filter(|&x| g.element_order(x) == p) {
            assert!(
                totient_degree_identity_holds(&g, x),
                "identity fails for x={x} in Z_{}",
                p * p
            );
        }
    }
}
