//! Executable statements: each theorem or lemma becomes an equivalence or
//! property check over one group, and a sweep runs them across a catalog.

use crate::connectivity::{
    self, AnalysisCaps, ConnectivityError, MinimalityVerdict,
};
use crate::graph::SimpleGraph;
use crate::groups::{euler_totient, is_prime, Classification, FiniteGroup, GroupSpec};
use crate::powergraph::{build_power_graph, PowerGraph};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;

pub const CATALOG_VERSION: &str = "1";
pub const DEFAULT_SAMPLE_SEED: u64 = 0xC0FFEE;
pub const DEFAULT_SAMPLE_COUNT: usize = 200;

/// Default catalog manifest: one group spec per line; `# slow` marks
/// entries skipped in fast mode.
pub const DEFAULT_CATALOG: &str = "\
cyclic 1
cyclic 2
cyclic 3
cyclic 4
cyclic 5
cyclic 6
cyclic 7
cyclic 8
cyclic 9
cyclic 12
cyclic 15
elementary_abelian 2 2
elementary_abelian 2 3
elementary_abelian 2 4
elementary_abelian 3 1
elementary_abelian 3 2
elementary_abelian 3 3
elementary_abelian 5 2
elementary_abelian 7 2
dihedral 3
dihedral 4
dihedral 5
dihedral 6
symmetric 3
symmetric 4
generalized_quaternion 8
generalized_quaternion 16
heisenberg 3
heisenberg 5 # slow
direct_product cyclic:2 cyclic:4
direct_product cyclic:3 cyclic:3
";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(non_camel_case_types)]
pub enum StatementId {
    Thm1,
    Thm2,
    RemarkCompletePrime,
    Lem2_1_i,
    Lem2_1_ii,
    Lem2_1_iii,
    Lem2_2,
    Lem2_3,
    Lem3_1_i,
    Lem3_1_ii,
    Lem3_2,
    Lem3_3,
    CliqueDecomposition,
    StarStructure,
}

impl StatementId {
    pub const ALL: [StatementId; 14] = [
        StatementId::Thm1,
        StatementId::Thm2,
        StatementId::RemarkCompletePrime,
        StatementId::Lem2_1_i,
        StatementId::Lem2_1_ii,
        StatementId::Lem2_1_iii,
        StatementId::Lem2_2,
        StatementId::Lem2_3,
        StatementId::Lem3_1_i,
        StatementId::Lem3_1_ii,
        StatementId::Lem3_2,
        StatementId::Lem3_3,
        StatementId::CliqueDecomposition,
        StatementId::StarStructure,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            StatementId::Thm1 => "thm1",
            StatementId::Thm2 => "thm2",
            StatementId::RemarkCompletePrime => "remark_complete_prime",
            StatementId::Lem2_1_i => "lem_2_1_i",
            StatementId::Lem2_1_ii => "lem_2_1_ii",
            StatementId::Lem2_1_iii => "lem_2_1_iii",
            StatementId::Lem2_2 => "lem_2_2",
            StatementId::Lem2_3 => "lem_2_3",
            StatementId::Lem3_1_i => "lem_3_1_i",
            StatementId::Lem3_1_ii => "lem_3_1_ii",
            StatementId::Lem3_2 => "lem_3_2",
            StatementId::Lem3_3 => "lem_3_3",
            StatementId::CliqueDecomposition => "clique_decomposition",
            StatementId::StarStructure => "star_structure",
        }
    }

    pub fn parse(s: &str) -> Option<StatementId> {
        StatementId::ALL.iter().copied().find(|id| id.as_str() == s)
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for StatementId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Structured counterexample carried by a failed verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum Witness {
    Element { element: usize },
    Edge { edge: (usize, usize) },
    Cut { cut: Vec<usize> },
    Subgraph { vertices: Vec<usize> },
    Note { note: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremVerdict {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<GroupSpec>,
    pub statement_id: StatementId,
    /// Group-theoretic side; `None` for one-directional property checks
    /// and not-applicable verdicts.
    pub lhs: Option<bool>,
    /// Graph-theoretic side; `None` when the check is not applicable.
    pub rhs: Option<bool>,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl TheoremVerdict {
    fn iff(statement_id: StatementId, lhs: bool, rhs: bool, witness: Option<Witness>) -> Self {
        let holds = lhs == rhs;
        TheoremVerdict {
            spec: None,
            statement_id,
            lhs: Some(lhs),
            rhs: Some(rhs),
            holds,
            witness: if holds { None } else { witness },
            reason: None,
            elapsed_ms: None,
        }
    }

    fn property(statement_id: StatementId, rhs: bool, witness: Option<Witness>) -> Self {
        TheoremVerdict {
            spec: None,
            statement_id,
            lhs: None,
            rhs: Some(rhs),
            holds: rhs,
            witness: if rhs { None } else { witness },
            reason: None,
            elapsed_ms: None,
        }
    }

    fn not_applicable(statement_id: StatementId, reason: &str) -> Self {
        TheoremVerdict {
            spec: None,
            statement_id,
            lhs: None,
            rhs: None,
            holds: true,
            witness: None,
            reason: Some(reason.to_string()),
            elapsed_ms: None,
        }
    }
}

/// Tunables for the sampled and enumerative checks.
#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub caps: AnalysisCaps,
    pub sample_count: usize,
    pub sample_seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            caps: AnalysisCaps::default(),
            sample_count: DEFAULT_SAMPLE_COUNT,
            sample_seed: DEFAULT_SAMPLE_SEED,
        }
    }
}

/// Shared per-group state; the expensive minimality predicates are computed
/// once and reused across statements.
pub struct CheckContext<'a> {
    group: &'a FiniteGroup,
    class: Classification,
    pg: PowerGraph,
    mec: OnceCell<Option<MinimalityVerdict>>,
    mc: OnceCell<Option<MinimalityVerdict>>,
}

impl<'a> CheckContext<'a> {
    pub fn new(group: &'a FiniteGroup) -> Self {
        CheckContext {
            group,
            class: group.classify(),
            pg: build_power_graph(group),
            mec: OnceCell::new(),
            mc: OnceCell::new(),
        }
    }

    pub fn power_graph(&self) -> &PowerGraph {
        &self.pg
    }

    /// `None` when the predicate's preconditions fail (trivial graph).
    fn minimally_edge_connected(&self) -> &Option<MinimalityVerdict> {
        self.mec.get_or_init(|| {
            connectivity::is_minimally_edge_connected(self.pg.graph()).ok()
        })
    }

    fn minimally_connected(&self) -> &Option<MinimalityVerdict> {
        self.mc
            .get_or_init(|| connectivity::is_minimally_connected(self.pg.graph()).ok())
    }

    fn mec_holds(&self) -> bool {
        self.minimally_edge_connected()
            .map(|v| v.verdict)
            .unwrap_or(false)
    }

    fn mc_holds(&self) -> bool {
        self.minimally_connected()
            .map(|v| v.verdict)
            .unwrap_or(false)
    }
}

/// Theorem 1: non-cyclic of prime exponent iff the power graph is
/// non-complete and minimally edge-connected.
pub fn check_theorem1(ctx: &CheckContext) -> TheoremVerdict {
    let lhs = !ctx.class.is_cyclic && ctx.class.prime_exponent.is_some();
    let rhs = !ctx.pg.graph().is_complete() && ctx.mec_holds();
    let witness = ctx
        .minimally_edge_connected()
        .and_then(|v| v.witness_edge)
        .map(|edge| Witness::Edge { edge });
    TheoremVerdict::iff(StatementId::Thm1, lhs, rhs, witness)
}

/// Theorem 2: elementary abelian 2-group of rank >= 2 iff the power graph
/// is non-complete and minimally connected.
pub fn check_theorem2(ctx: &CheckContext) -> TheoremVerdict {
    let lhs = matches!(ctx.class.elementary_abelian, Some((2, r)) if r >= 2);
    let rhs = !ctx.pg.graph().is_complete() && ctx.mc_holds();
    let witness = ctx
        .minimally_connected()
        .and_then(|v| v.witness_edge)
        .map(|edge| Witness::Edge { edge });
    TheoremVerdict::iff(StatementId::Thm2, lhs, rhs, witness)
}

/// Closing remark: cyclic of prime exponent p iff the power graph is the
/// complete graph on p vertices.
pub fn check_remark_complete_prime(ctx: &CheckContext) -> TheoremVerdict {
    let lhs = ctx.class.is_cyclic && ctx.class.prime_exponent.is_some();
    let rhs = ctx.pg.graph().is_complete() && is_prime(ctx.group.order());
    TheoremVerdict::iff(StatementId::RemarkCompletePrime, lhs, rhs, None)
}

/// Complete iff cyclic of order one or prime power.
pub fn check_lemma_2_1_i(ctx: &CheckContext) -> TheoremVerdict {
    TheoremVerdict::iff(
        StatementId::Lem2_1_i,
        ctx.class.is_cyclic_prime_power,
        ctx.pg.graph().is_complete(),
        None,
    )
}

/// Every induced subgraph with the identity vertex has κ' = δ. Exhaustive
/// for |G| <= 8, sampled otherwise.
pub fn check_lemma_2_1_ii(ctx: &CheckContext, options: &CheckOptions) -> TheoremVerdict {
    let n = ctx.group.order();
    if n < 2 {
        return TheoremVerdict::not_applicable(StatementId::Lem2_1_ii, "group has one element");
    }
    let graph = ctx.pg.graph();
    let check_subset = |subset: &[usize]| -> bool {
        let induced = graph.induced_subgraph(subset).expect("valid vertices");
        let delta = induced.min_degree().expect("non-empty");
        let kappa_prime = connectivity::edge_connectivity(&induced).expect("non-empty");
        kappa_prime == delta
    };
    let mut failure: Option<Vec<usize>> = None;
    if n <= 8 {
        for mask in 0u32..(1 << (n - 1)) {
            let mut subset = vec![0usize];
            subset.extend((1..n).filter(|&v| mask >> (v - 1) & 1 == 1));
            if subset.len() >= 2 && !check_subset(&subset) {
                failure = Some(subset);
                break;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(options.sample_seed);
        for _ in 0..options.sample_count {
            let mut subset = vec![0usize];
            subset.extend((1..n).filter(|_| rng.random_bool(0.5)));
            if subset.len() >= 2 && !check_subset(&subset) {
                failure = Some(subset);
                break;
            }
        }
    }
    let rhs = failure.is_none();
    let witness = failure.map(|vertices| Witness::Subgraph { vertices });
    TheoremVerdict::property(StatementId::Lem2_1_ii, rhs, witness)
}

/// Every minimum separating set of the power graph is a union of whole
/// generator classes.
pub fn check_lemma_2_1_iii(ctx: &CheckContext, options: &CheckOptions) -> TheoremVerdict {
    let graph = ctx.pg.graph();
    if graph.is_complete() {
        return TheoremVerdict::not_applicable(
            StatementId::Lem2_1_iii,
            "complete graph has no separating set",
        );
    }
    let cuts = match connectivity::minimum_vertex_cuts(graph, &options.caps) {
        Ok(cuts) => cuts,
        Err(ConnectivityError::CapExceeded(msg)) => {
            return TheoremVerdict::not_applicable(StatementId::Lem2_1_iii, &msg)
        }
        Err(e) => return TheoremVerdict::not_applicable(StatementId::Lem2_1_iii, &e.to_string()),
    };
    for cut in &cuts {
        for &x in cut {
            let class = ctx.group.generator_class(x);
            if !class.iter().all(|y| cut.binary_search(y).is_ok()) {
                return TheoremVerdict::property(
                    StatementId::Lem2_1_iii,
                    false,
                    Some(Witness::Cut { cut: cut.clone() }),
                );
            }
        }
    }
    TheoremVerdict::property(StatementId::Lem2_1_iii, true, None)
}

/// The reduced graph is regular iff cyclic of prime power order or of
/// prime exponent.
pub fn check_lemma_2_2(ctx: &CheckContext) -> TheoremVerdict {
    if ctx.group.order() < 2 {
        return TheoremVerdict::not_applicable(StatementId::Lem2_2, "group has one element");
    }
    let lhs = ctx.class.is_cyclic_prime_power || ctx.class.prime_exponent.is_some();
    let rhs = ctx.pg.reduced_graph().is_regular();
    TheoremVerdict::iff(StatementId::Lem2_2, lhs, rhs, None)
}

/// In a p-group, each order-p element is adjacent to every other vertex of
/// its component of the reduced graph.
pub fn check_lemma_2_3(ctx: &CheckContext) -> TheoremVerdict {
    let Some(p) = ctx.class.is_p_group else {
        return TheoremVerdict::not_applicable(StatementId::Lem2_3, "not a p-group");
    };
    let reduced = ctx.pg.reduced_graph();
    // Reduced vertex v is element v + 1.
    let components = reduced.connected_components();
    for x in 1..ctx.group.order() {
        if ctx.group.element_order(x) != p {
            continue;
        }
        let v = x - 1;
        let component = components
            .iter()
            .find(|c| c.binary_search(&v).is_ok())
            .expect("vertex in some component");
        if component
            .iter()
            .any(|&u| u != v && !reduced.has_edge(v, u))
        {
            return TheoremVerdict::property(
                StatementId::Lem2_3,
                false,
                Some(Witness::Element { element: x }),
            );
        }
    }
    TheoremVerdict::property(StatementId::Lem2_3, true, None)
}

/// Under minimal edge-connectivity: every element of order > 2 has minimum
/// degree in the power graph.
pub fn check_lemma_3_1_i(ctx: &CheckContext) -> TheoremVerdict {
    if !ctx.mec_holds() {
        return TheoremVerdict::not_applicable(
            StatementId::Lem3_1_i,
            "power graph is not minimally edge-connected",
        );
    }
    let graph = ctx.pg.graph();
    let delta = graph.min_degree().expect("non-empty");
    for x in 0..ctx.group.order() {
        if ctx.group.element_order(x) > 2 && graph.degree(x) != delta {
            return TheoremVerdict::property(
                StatementId::Lem3_1_i,
                false,
                Some(Witness::Element { element: x }),
            );
        }
    }
    TheoremVerdict::property(StatementId::Lem3_1_i, true, None)
}

/// Under minimal edge-connectivity: every maximal cyclic subgroup of order
/// > 2 has order δ + 1.
pub fn check_lemma_3_1_ii(ctx: &CheckContext) -> TheoremVerdict {
    if !ctx.mec_holds() {
        return TheoremVerdict::not_applicable(
            StatementId::Lem3_1_ii,
            "power graph is not minimally edge-connected",
        );
    }
    let delta = ctx.pg.graph().min_degree().expect("non-empty");
    for sub in ctx.group.maximal_cyclic_subgroups() {
        if sub.len() > 2 && sub.len() != delta + 1 {
            let generator = sub
                .iter()
                .copied()
                .find(|&y| ctx.group.element_order(y) == sub.len())
                .expect("cyclic subgroup has a generator");
            return TheoremVerdict::property(
                StatementId::Lem3_1_ii,
                false,
                Some(Witness::Element { element: generator }),
            );
        }
    }
    TheoremVerdict::property(StatementId::Lem3_1_ii, true, None)
}

/// If the group has no maximal cyclic subgroup of order two and its power
/// graph is minimally edge-connected, the order is a prime power.
pub fn check_lemma_3_2(ctx: &CheckContext) -> TheoremVerdict {
    let no_order_two_maximal = ctx
        .group
        .maximal_cyclic_subgroups()
        .iter()
        .all(|s| s.len() != 2);
    let antecedent = no_order_two_maximal && ctx.mec_holds();
    let rhs = !antecedent || ctx.class.is_p_group.is_some();
    TheoremVerdict::property(
        StatementId::Lem3_2,
        rhs,
        Some(Witness::Note {
            note: format!("order {} is not a prime power", ctx.group.order()),
        }),
    )
}

/// For every edge ε with Γ−ε connected and κ(Γ−ε) = κ(Γ)−1, no minimum
/// separating set of Γ−ε contains an endpoint of ε.
pub fn check_lemma_3_3(ctx: &CheckContext, options: &CheckOptions) -> TheoremVerdict {
    let graph = ctx.pg.graph();
    if graph.vertex_count() < 2 {
        return TheoremVerdict::not_applicable(StatementId::Lem3_3, "trivial graph");
    }
    if graph.vertex_count() > options.caps.cut_vertex_cap {
        return TheoremVerdict::not_applicable(
            StatementId::Lem3_3,
            "vertex count exceeds cut enumeration cap",
        );
    }
    let kappa = connectivity::vertex_connectivity(graph).expect("non-empty");
    for (u, v) in graph.edges() {
        let pruned = graph.delete_edge(u, v).expect("edge exists");
        if !pruned.is_connected() {
            continue;
        }
        let pruned_kappa = connectivity::vertex_connectivity(&pruned).expect("non-empty");
        if pruned_kappa + 1 != kappa {
            continue;
        }
        let cuts = match connectivity::minimum_vertex_cuts(&pruned, &options.caps) {
            Ok(cuts) => cuts,
            Err(ConnectivityError::CapExceeded(msg)) => {
                return TheoremVerdict::not_applicable(StatementId::Lem3_3, &msg)
            }
            Err(ConnectivityError::CompleteGraph) => continue,
            Err(e) => {
                return TheoremVerdict::not_applicable(StatementId::Lem3_3, &e.to_string())
            }
        };
        for cut in &cuts {
            if cut.binary_search(&u).is_ok() || cut.binary_search(&v).is_ok() {
                return TheoremVerdict::property(
                    StatementId::Lem3_3,
                    false,
                    Some(Witness::Cut { cut: cut.clone() }),
                );
            }
        }
    }
    TheoremVerdict::property(StatementId::Lem3_3, true, None)
}

/// For non-cyclic groups of prime exponent p: the blocks of the power graph
/// are exactly (|G|−1)/(p−1) maximal cliques of size p, pairwise meeting in
/// the identity, each induced by a maximal cyclic subgroup.
pub fn check_clique_decomposition(ctx: &CheckContext) -> TheoremVerdict {
    let (Some(p), false) = (ctx.class.prime_exponent, ctx.class.is_cyclic) else {
        return TheoremVerdict::not_applicable(
            StatementId::CliqueDecomposition,
            "group is cyclic or not of prime exponent",
        );
    };
    let n = ctx.group.order();
    let graph = ctx.pg.graph();
    let blocks = graph.blocks();
    let expected = (n - 1) / (p - 1);
    let maximal = ctx.group.maximal_cyclic_subgroups();
    let ok = blocks.len() == expected
        && blocks.iter().all(|b| {
            b.len() == p
                && b[0] == 0
                && graph.induced_subgraph(b).expect("valid").is_complete()
                && maximal.contains(b)
        })
        && blocks.iter().enumerate().all(|(i, a)| {
            blocks[i + 1..]
                .iter()
                .all(|b| a.iter().filter(|v| b.contains(v)).count() == 1)
        });
    let witness = blocks.first().cloned().map(|b| Witness::Subgraph { vertices: b });
    TheoremVerdict::property(StatementId::CliqueDecomposition, ok, witness)
}

fn is_star(graph: &SimpleGraph) -> bool {
    let n = graph.vertex_count();
    n >= 4
        && graph.degree(0) == n - 1
        && (1..n).all(|v| graph.degree(v) == 1)
}

/// When the power graph is non-complete and minimally connected, it is a
/// star on three or more leaves centered at the identity.
pub fn check_star_structure(ctx: &CheckContext) -> TheoremVerdict {
    let graph = ctx.pg.graph();
    if graph.is_complete() || !ctx.mc_holds() {
        return TheoremVerdict::not_applicable(
            StatementId::StarStructure,
            "power graph is complete or not minimally connected",
        );
    }
    TheoremVerdict::property(StatementId::StarStructure, is_star(graph), None)
}

pub fn check(ctx: &CheckContext, statement: StatementId, options: &CheckOptions) -> TheoremVerdict {
    match statement {
        StatementId::Thm1 => check_theorem1(ctx),
        StatementId::Thm2 => check_theorem2(ctx),
        StatementId::RemarkCompletePrime => check_remark_complete_prime(ctx),
        StatementId::Lem2_1_i => check_lemma_2_1_i(ctx),
        StatementId::Lem2_1_ii => check_lemma_2_1_ii(ctx, options),
        StatementId::Lem2_1_iii => check_lemma_2_1_iii(ctx, options),
        StatementId::Lem2_2 => check_lemma_2_2(ctx),
        StatementId::Lem2_3 => check_lemma_2_3(ctx),
        StatementId::Lem3_1_i => check_lemma_3_1_i(ctx),
        StatementId::Lem3_1_ii => check_lemma_3_1_ii(ctx),
        StatementId::Lem3_2 => check_lemma_3_2(ctx),
        StatementId::Lem3_3 => check_lemma_3_3(ctx, options),
        StatementId::CliqueDecomposition => check_clique_decomposition(ctx),
        StatementId::StarStructure => check_star_structure(ctx),
    }
}

/// One catalog line: the spec plus its slow marker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub spec: GroupSpec,
    pub slow: bool,
}

/// Parses a manifest: one spec per line, `#` starts a comment, a comment
/// containing `slow` flags the entry for fast-mode exclusion.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, crate::groups::GroupError> {
    let mut entries = Vec::new();
    for line in text.lines() {
        let (body, comment) = match line.split_once('#') {
            Some((b, c)) => (b, c),
            None => (line, ""),
        };
        if body.trim().is_empty() {
            continue;
        }
        entries.push(CatalogEntry {
            spec: GroupSpec::parse(body)?,
            slow: comment.contains("slow"),
        });
    }
    Ok(entries)
}

pub fn default_catalog() -> Vec<CatalogEntry> {
    parse_catalog(DEFAULT_CATALOG).expect("default catalog parses")
}

#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub check: CheckOptions,
    /// Skip entries marked slow in the manifest.
    pub fast: bool,
    /// Record per-verdict wall-clock times (breaks byte-for-byte
    /// reproducibility of the JSON output).
    pub timings: bool,
    pub max_order: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            check: CheckOptions::default(),
            fast: false,
            timings: false,
            max_order: crate::groups::DEFAULT_MAX_ORDER,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StatementSummary {
    pub checked: usize,
    pub held: usize,
    pub failed: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CatalogSweepReport {
    pub catalog_version: String,
    pub verdicts: Vec<TheoremVerdict>,
    pub summary: BTreeMap<String, StatementSummary>,
    pub failures: Vec<TheoremVerdict>,
}

impl CatalogSweepReport {
    pub fn failure_count(&self) -> usize {
        self.failures.len()
    }
}

/// Runs every requested statement on every catalog entry. Per-group build
/// errors become failed verdicts; the sweep never aborts.
pub fn sweep(
    catalog: &[CatalogEntry],
    statements: &[StatementId],
    options: &SweepOptions,
) -> CatalogSweepReport {
    let mut verdicts = Vec::new();
    for entry in catalog {
        if options.fast && entry.slow {
            continue;
        }
        match entry.spec.build_capped(options.max_order) {
            Ok(group) => {
                let ctx = CheckContext::new(&group);
                for &statement in statements {
                    let start = std::time::Instant::now();
                    let mut verdict = check(&ctx, statement, &options.check);
                    verdict.spec = Some(entry.spec.clone());
                    if options.timings {
                        verdict.elapsed_ms = Some(start.elapsed().as_millis() as u64);
                    }
                    verdicts.push(verdict);
                }
            }
            Err(e) => {
                for &statement in statements {
                    verdicts.push(TheoremVerdict {
                        spec: Some(entry.spec.clone()),
                        statement_id: statement,
                        lhs: None,
                        rhs: None,
                        holds: false,
                        witness: Some(Witness::Note {
                            note: format!("group construction failed: {e}"),
                        }),
                        reason: Some(e.to_string()),
                        elapsed_ms: None,
                    });
                }
            }
        }
    }
    let mut summary: BTreeMap<String, StatementSummary> = BTreeMap::new();
    for v in &verdicts {
        let s = summary.entry(v.statement_id.to_string()).or_default();
        s.checked += 1;
        if !v.holds {
            s.failed += 1;
        } else if v.rhs.is_none() && v.lhs.is_none() {
            s.not_applicable += 1;
        } else {
            s.held += 1;
        }
    }
    let failures: Vec<TheoremVerdict> = verdicts.iter().filter(|v| !v.holds).cloned().collect();
    CatalogSweepReport {
        catalog_version: CATALOG_VERSION.to_string(),
        verdicts,
        summary,
        failures,
    }
}

/// Degree identity from the totient argument: for `x` of non-maximal order
/// in a cyclic p²-group, `deg(x) = o(x) − 1 + m·φ(exponent)`.
pub fn totient_degree_identity_holds(group: &FiniteGroup, x: usize) -> bool {
    let pg = build_power_graph(group);
    let order = group.element_order(x);
    let m = group.count_maximal_containing(x);
    pg.graph().degree(x) == order - 1 + m * euler_totient(group.exponent())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;

    fn run(group: &FiniteGroup, statement: StatementId) -> TheoremVerdict {
        let ctx = CheckContext::new(group);
        check(&ctx, statement, &CheckOptions::default())
    }

    #[test]
    fn thm1_examples() {
        let v = run(&groups::elementary_abelian(2, 2).unwrap(), StatementId::Thm1);
        assert_eq!((v.lhs, v.rhs, v.holds), (Some(true), Some(true), true));

        let v = run(&groups::heisenberg(3).unwrap(), StatementId::Thm1);
        assert_eq!((v.lhs, v.rhs, v.holds), (Some(true), Some(true), true));

        let v = run(&groups::generalized_quaternion(8).unwrap(), StatementId::Thm1);
        assert_eq!((v.lhs, v.rhs, v.holds), (Some(false), Some(false), true));
    }

    #[test]
    fn thm1_trivial_group() {
        let v = run(&groups::cyclic(1), StatementId::Thm1);
        assert_eq!((v.lhs, v.rhs, v.holds), (Some(false), Some(false), true));
    }

    #[test]
    fn thm2_examples() {
        let v = run(&groups::elementary_abelian(2, 3).unwrap(), StatementId::Thm2);
        assert_eq!((v.lhs, v.rhs, v.holds), (Some(true), Some(true), true));

        // Minimally edge-connected but not minimally connected.
        let v = run(&groups::elementary_abelian(3, 2).unwrap(), StatementId::Thm2);
        assert_eq!((v.lhs, v.rhs, v.holds), (Some(false), Some(false), true));

        let v = run(&groups::cyclic(4), StatementId::Thm2);
        assert_eq!((v.lhs, v.rhs, v.holds), (Some(false), Some(false), true));
    }

    #[test]
    fn remark_examples() {
        let v = run(&groups::cyclic(7), StatementId::RemarkCompletePrime);
        assert_eq!((v.lhs, v.rhs), (Some(true), Some(true)));
        let v = run(&groups::cyclic(9), StatementId::RemarkCompletePrime);
        assert_eq!((v.lhs, v.rhs), (Some(false), Some(false)));
        let v = run(&groups::symmetric(3).unwrap(), StatementId::RemarkCompletePrime);
        assert_eq!((v.lhs, v.rhs), (Some(false), Some(false)));
    }

    #[test]
    fn lemma_2_1_i_examples() {
        let v = run(&groups::cyclic(1), StatementId::Lem2_1_i);
        assert_eq!((v.lhs, v.rhs), (Some(true), Some(true)));
        let v = run(&groups::cyclic(6), StatementId::Lem2_1_i);
        assert_eq!((v.lhs, v.rhs), (Some(false), Some(false)));
        let v = run(&groups::cyclic(8), StatementId::Lem2_1_i);
        assert_eq!((v.lhs, v.rhs), (Some(true), Some(true)));
    }

    #[test]
    fn lemma_2_1_ii_small_groups() {
        for g in [
            groups::elementary_abelian(2, 2).unwrap(),
            groups::cyclic(6),
            groups::generalized_quaternion(8).unwrap(),
        ] {
            let v = run(&g, StatementId::Lem2_1_ii);
            assert!(v.holds, "lemma 2.1(ii) failed on order {}", g.order());
        }
    }

    #[test]
    fn lemma_2_1_iii_z6_cut() {
        let g = groups::cyclic(6);
        let ctx = CheckContext::new(&g);
        let cuts =
            connectivity::minimum_vertex_cuts(ctx.pg.graph(), &AnalysisCaps::default()).unwrap();
        assert_eq!(cuts, vec![vec![0, 1, 5]]); // {e} ∪ [x]
        let v = check(&ctx, StatementId::Lem2_1_iii, &CheckOptions::default());
        assert!(v.holds);
        assert_eq!(v.rhs, Some(true));
    }

    #[test]
    fn lemma_2_2_examples() {
        let v = run(&groups::heisenberg(3).unwrap(), StatementId::Lem2_2);
        assert_eq!((v.lhs, v.rhs), (Some(true), Some(true)));
        let v = run(&groups::cyclic(12), StatementId::Lem2_2);
        assert_eq!((v.lhs, v.rhs), (Some(false), Some(false)));
        let v = run(&groups::cyclic(8), StatementId::Lem2_2);
        assert_eq!((v.lhs, v.rhs), (Some(true), Some(true)));
    }

    #[test]
    fn lemma_2_3_examples() {
        for g in [
            groups::generalized_quaternion(8).unwrap(),
            groups::cyclic(9),
            groups::elementary_abelian(2, 3).unwrap(),
        ] {
            let v = run(&g, StatementId::Lem2_3);
            assert!(v.holds);
            assert_eq!(v.rhs, Some(true));
        }
        let v = run(&groups::cyclic(6), StatementId::Lem2_3);
        assert!(v.reason.is_some()); // not a p-group
    }

    #[test]
    fn lemma_3_1_examples() {
        let v = run(&groups::heisenberg(3).unwrap(), StatementId::Lem3_1_i);
        assert_eq!(v.rhs, Some(true));
        let v = run(&groups::elementary_abelian(5, 2).unwrap(), StatementId::Lem3_1_ii);
        assert_eq!(v.rhs, Some(true));
        // Vacuous: no element of order > 2.
        let v = run(&groups::elementary_abelian(2, 2).unwrap(), StatementId::Lem3_1_i);
        assert!(v.holds);
    }

    #[test]
    fn lemma_3_2_examples() {
        for g in [
            groups::heisenberg(3).unwrap(),
            groups::elementary_abelian(2, 2).unwrap(),
            groups::cyclic(6),
        ] {
            assert!(run(&g, StatementId::Lem3_2).holds);
        }
    }

    #[test]
    fn lemma_3_3_examples() {
        for g in [
            groups::elementary_abelian(2, 2).unwrap(),
            groups::cyclic(6),
            groups::cyclic(4),
        ] {
            let v = run(&g, StatementId::Lem3_3);
            assert!(v.holds, "lemma 3.3 failed on order {}", g.order());
        }
    }

    #[test]
    fn clique_decomposition_examples() {
        let v = run(&groups::elementary_abelian(3, 2).unwrap(), StatementId::CliqueDecomposition);
        assert_eq!(v.rhs, Some(true));
        let v = run(&groups::heisenberg(3).unwrap(), StatementId::CliqueDecomposition);
        assert_eq!(v.rhs, Some(true));
        let v = run(&groups::elementary_abelian(2, 2).unwrap(), StatementId::CliqueDecomposition);
        assert_eq!(v.rhs, Some(true));
        // Not applicable to Q8 (exponent 4).
        let v = run(&groups::generalized_quaternion(8).unwrap(), StatementId::CliqueDecomposition);
        assert!(v.reason.is_some());
    }

    #[test]
    fn star_structure_examples() {
        let v = run(&groups::elementary_abelian(2, 4).unwrap(), StatementId::StarStructure);
        assert_eq!(v.rhs, Some(true));
        let v = run(&groups::cyclic(6), StatementId::StarStructure);
        assert!(v.reason.is_some());
    }

    #[test]
    fn totient_degree_identity_on_zp2() {
        // Z_{p^2} is the formula's habitat: x of order p sits in one maximal
        // cyclic subgroup (the whole group).
        for p in [2usize, 3, 5] {
            let g = groups::cyclic(p * p);
            for x in 0..p * p {
                if g.element_order(x) == p {
                    assert!(totient_degree_identity_holds(&g, x));
                }
            }
        }
    }

    #[test]
    fn sweep_trivial_catalog() {
        let catalog = parse_catalog("cyclic 1\n").unwrap();
        let report = sweep(
            &catalog,
            &[StatementId::Thm1, StatementId::Thm2],
            &SweepOptions::default(),
        );
        assert_eq!(report.verdicts.len(), 2);
        assert_eq!(report.failure_count(), 0);
    }

    #[test]
    fn sweep_captures_build_errors() {
        let catalog = vec![CatalogEntry {
            spec: GroupSpec::Cyclic { n: 0 },
            slow: false,
        }];
        let report = sweep(&catalog, &[StatementId::Thm1], &SweepOptions::default());
        assert_eq!(report.failure_count(), 1);
    }

    #[test]
    fn default_catalog_parses() {
        let catalog = default_catalog();
        assert_eq!(catalog.len(), 31);
        assert_eq!(catalog.iter().filter(|e| e.slow).count(), 1);
    }

    #[test]
    fn statement_id_round_trip() {
        for id in StatementId::ALL {
            assert_eq!(StatementId::parse(id.as_str()), Some(id));
        }
        assert_eq!(StatementId::parse("thm3"), None);
    }
}
