//! `powergraph`: build finite groups, export their power graphs, run
//! connectivity analyses and theorem checks, and sweep a catalog.
//!
//! Exit codes: 0 success / all statements hold, 1 statement failure,
//! 2 usage or input error, 3 enumeration or order cap exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use powergraph_core::connectivity::{self, AnalysisCaps, ConnectivityError};
use powergraph_core::groups::{FiniteGroup, GroupError, GroupSpec};
use powergraph_core::powergraph::build_power_graph;
use powergraph_core::theorems::{
    self, CheckContext, CheckOptions, StatementId, SweepOptions,
};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_STATEMENT_FAILURE: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;
const EXIT_CAP_EXCEEDED: u8 = 3;

#[derive(Parser)]
#[command(name = "powergraph", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args)]
struct GroupSource {
    /// Group family (cyclic, elementary_abelian, dihedral, symmetric,
    /// generalized_quaternion/quaternion, heisenberg).
    #[arg(long)]
    family: Option<String>,
    /// Family parameter n (cyclic, dihedral, symmetric degree).
    #[arg(long)]
    n: Option<usize>,
    /// Prime p (elementary_abelian, heisenberg).
    #[arg(long)]
    p: Option<usize>,
    /// Rank r (elementary_abelian).
    #[arg(long)]
    r: Option<u32>,
    /// Group order (generalized_quaternion).
    #[arg(long)]
    order: Option<usize>,
    /// Full spec string, e.g. "direct_product cyclic:2 cyclic:4".
    #[arg(long)]
    spec: Option<String>,
    /// Cayley table file: first line n, then n rows of n indices.
    #[arg(long)]
    cayley_file: Option<PathBuf>,
    /// Permutation generator file: one generator per line, cycle notation.
    #[arg(long)]
    perm_file: Option<PathBuf>,
}

#[derive(Args)]
struct CapArgs {
    /// Maximum group order.
    #[arg(long, env = "PG_MAX_ORDER", default_value_t = powergraph_core::groups::DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Vertex-count cap for minimum-cut enumeration.
    #[arg(long, default_value_t = 64)]
    cut_cap: usize,
    /// Connectivity cap for minimum-cut enumeration.
    #[arg(long, default_value_t = 6)]
    kappa_cap: usize,
    /// Induced-subgraph sample count for the sampled checks.
    #[arg(long, default_value_t = theorems::DEFAULT_SAMPLE_COUNT)]
    samples: usize,
    /// RNG seed for the sampled checks.
    #[arg(long, default_value_t = theorems::DEFAULT_SAMPLE_SEED)]
    seed: u64,
}

impl CapArgs {
    fn check_options(&self) -> CheckOptions {
        CheckOptions {
            caps: AnalysisCaps {
                cut_vertex_cap: self.cut_cap,
                cut_kappa_cap: self.kappa_cap,
                ..AnalysisCaps::default()
            },
            sample_count: self.samples,
            sample_seed: self.seed,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Construct a group and print its structural summary.
    Build {
        #[command(flatten)]
        source: GroupSource,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Export the power graph (or reduced power graph) as DOT or an
    /// adjacency list.
    Graph {
        #[command(flatten)]
        source: GroupSource,
        #[command(flatten)]
        caps: CapArgs,
        /// Export the reduced graph (identity vertex deleted).
        #[arg(long)]
        reduced: bool,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Full connectivity report of the power graph.
    Analyze {
        #[command(flatten)]
        source: GroupSource,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run theorem/lemma statements against one group.
    Check {
        #[command(flatten)]
        source: GroupSource,
        #[command(flatten)]
        caps: CapArgs,
        /// Statement ids (thm1, thm2, lem_2_1_i, ...); default: all.
        #[arg(long = "stmt")]
        statements: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run statements across a catalog manifest ("default" or a path).
    Sweep {
        /// Catalog manifest path, or "default" for the built-in catalog.
        #[arg(long, default_value = "default")]
        catalog: String,
        #[command(flatten)]
        caps: CapArgs,
        /// Statement ids to run; default: all.
        #[arg(long = "stmt")]
        statements: Vec<String>,
        /// Skip entries marked slow in the manifest.
        #[arg(long)]
        fast: bool,
        /// Record per-verdict timings (output is no longer reproducible).
        #[arg(long)]
        timings: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: EXIT_INPUT_ERROR,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        let code = match e {
            GroupError::OrderCapExceeded { .. } => EXIT_CAP_EXCEEDED,
            _ => EXIT_INPUT_ERROR,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

impl From<ConnectivityError> for CliError {
    fn from(e: ConnectivityError) -> Self {
        let code = match e {
            ConnectivityError::CapExceeded(_) => EXIT_CAP_EXCEEDED,
            _ => EXIT_INPUT_ERROR,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

fn resolve_spec(source: &GroupSource) -> Result<GroupSpec, CliError> {
    let mut specs: Vec<GroupSpec> = Vec::new();
    if let Some(text) = &source.spec {
        specs.push(GroupSpec::parse(text)?);
    }
    if let Some(path) = &source.cayley_file {
        specs.push(GroupSpec::CayleyFile { path: path.clone() });
    }
    if let Some(path) = &source.perm_file {
        specs.push(GroupSpec::PermFile { path: path.clone() });
    }
    if let Some(family) = &source.family {
        let missing = |what: &str| {
            CliError::input(format!("--family {family} requires --{what}"))
        };
        let spec = match family.as_str() {
            "cyclic" => GroupSpec::Cyclic {
                n: source.n.ok_or_else(|| missing("n"))?,
            },
            "elementary_abelian" => GroupSpec::ElementaryAbelian {
                p: source.p.ok_or_else(|| missing("p"))?,
                r: source.r.ok_or_else(|| missing("r"))?,
            },
            "dihedral" => GroupSpec::Dihedral {
                n: source.n.ok_or_else(|| missing("n"))?,
            },
            "symmetric" => GroupSpec::Symmetric {
                degree: source.n.ok_or_else(|| missing("n"))?,
            },
            "generalized_quaternion" | "quaternion" => GroupSpec::GeneralizedQuaternion {
                order: source.order.ok_or_else(|| missing("order"))?,
            },
            "heisenberg" => GroupSpec::Heisenberg {
                p: source.p.ok_or_else(|| missing("p"))?,
            },
            other => return Err(CliError::input(format!("unknown family {other:?}"))),
        };
        specs.push(spec);
    }
    match specs.len() {
        0 => Err(CliError::input(
            "no group source: pass --family, --spec, --cayley-file or --perm-file",
        )),
        1 => Ok(specs.pop().unwrap()),
        _ => Err(CliError::input("multiple group sources given; pass exactly one")),
    }
}

fn build_group(source: &GroupSource, caps: &CapArgs) -> Result<(GroupSpec, FiniteGroup), CliError> {
    let spec = resolve_spec(source)?;
    let group = spec.build_capped(caps.max_order)?;
    Ok((spec, group))
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json_line(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

fn parse_statements(raw: &[String]) -> Result<Vec<StatementId>, CliError> {
    if raw.is_empty() {
        return Ok(StatementId::ALL.to_vec());
    }
    raw.iter()
        .map(|s| {
            StatementId::parse(s)
                .ok_or_else(|| CliError::input(format!("unknown statement id {s:?}")))
        })
        .collect()
}

fn cmd_build(
    source: &GroupSource,
    caps: &CapArgs,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<u8, CliError> {
    let (spec, group) = build_group(source, caps)?;
    let class = group.classify();
    let maximal = group.maximal_cyclic_subgroups().len();
    let text = match format {
        Format::Json => {
            let mut value = serde_json::to_value(class).expect("serializable");
            value["spec"] = serde_json::Value::String(spec.to_string());
            value["maximalCyclicSubgroups"] = serde_json::Value::from(maximal);
            json_line(&value)
        }
        _ => {
            let mut text = format!(
                "spec: {spec}\norder: {}\nexponent: {}\ncyclic: {}\ncyclic prime power: {}\n",
                class.order, class.exponent, class.is_cyclic, class.is_cyclic_prime_power
            );
            if let Some(p) = class.prime_exponent {
                text.push_str(&format!("prime exponent: {p}\n"));
            }
            if let Some(p) = class.is_p_group {
                text.push_str(&format!("p-group: p={p}\n"));
            }
            if let Some((p, r)) = class.elementary_abelian {
                text.push_str(&format!("elementary abelian: p={p} rank={r}\n"));
            }
            text.push_str(&format!("maximal cyclic subgroups: {maximal}\n"));
            text
        }
    };
    emit(output, &text)?;
    Ok(0)
}

fn cmd_graph(
    source: &GroupSource,
    caps: &CapArgs,
    reduced: bool,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<u8, CliError> {
    let (_, group) = build_group(source, caps)?;
    let pg = build_power_graph(&group);
    let graph = if reduced {
        pg.reduced_graph()
    } else {
        pg.graph().clone()
    };
    let text = match format {
        Format::Dot => graph.to_dot(),
        _ => graph.to_adjacency_list(),
    };
    emit(output, &text)?;
    Ok(0)
}

fn cmd_analyze(
    source: &GroupSource,
    caps: &CapArgs,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<u8, CliError> {
    let (spec, group) = build_group(source, caps)?;
    let report = connectivity::analyze(build_power_graph(&group).graph())?;
    let text = match format {
        Format::Json => {
            let mut value = serde_json::to_value(&report).expect("serializable");
            value["spec"] = serde_json::Value::String(spec.to_string());
            json_line(&value)
        }
        _ => {
            let verdict = |o: &connectivity::MinimalityOutcome| match o.verdict {
                Some(v) => v.to_string(),
                None => format!(
                    "not applicable ({})",
                    o.reason.as_deref().unwrap_or("unknown")
                ),
            };
            format!(
                "spec: {spec}\nvertices: {}\nedges: {}\nmin degree: {}\nvertex connectivity: {}\nedge connectivity: {}\nconnected: {}\nminimally connected: {}\nminimally edge-connected: {}\n",
                report.vertex_count,
                report.edge_count,
                report.min_degree,
                report.vertex_connectivity,
                report.edge_connectivity,
                report.is_connected,
                verdict(&report.minimally_connected),
                verdict(&report.minimally_edge_connected),
            )
        }
    };
    emit(output, &text)?;
    Ok(0)
}

fn cmd_check(
    source: &GroupSource,
    caps: &CapArgs,
    statements: &[String],
    format: Format,
    output: &Option<PathBuf>,
) -> Result<u8, CliError> {
    let statements = parse_statements(statements)?;
    let (spec, group) = build_group(source, caps)?;
    let options = caps.check_options();
    let ctx = CheckContext::new(&group);
    let verdicts: Vec<_> = statements
        .iter()
        .map(|&statement| {
            let mut v = theorems::check(&ctx, statement, &options);
            v.spec = Some(spec.clone());
            v
        })
        .collect();
    let any_failed = verdicts.iter().any(|v| !v.holds);
    let text = match format {
        Format::Json => json_line(&serde_json::to_value(&verdicts).expect("serializable")),
        _ => {
            let mut text = String::new();
            for v in &verdicts {
                let state = match (v.holds, &v.reason) {
                    (true, Some(reason)) => format!("n/a ({reason})"),
                    (true, None) => "holds".to_string(),
                    (false, _) => "FAILED".to_string(),
                };
                text.push_str(&format!("{}: {state}\n", v.statement_id));
            }
            text
        }
    };
    emit(output, &text)?;
    Ok(if any_failed { EXIT_STATEMENT_FAILURE } else { 0 })
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    catalog: &str,
    caps: &CapArgs,
    statements: &[String],
    fast: bool,
    timings: bool,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<u8, CliError> {
    let statements = parse_statements(statements)?;
    let entries = if catalog == "default" {
        theorems::default_catalog()
    } else {
        let text = std::fs::read_to_string(catalog)
            .map_err(|e| CliError::input(format!("cannot read catalog {catalog:?}: {e}")))?;
        theorems::parse_catalog(&text)?
    };
    let options = SweepOptions {
        check: caps.check_options(),
        fast,
        timings,
        max_order: caps.max_order,
    };
    let report = theorems::sweep(&entries, &statements, &options);
    let text = match format {
        Format::Json => json_line(&serde_json::to_value(&report).expect("serializable")),
        _ => {
            let mut text = format!("catalog version {}\n", report.catalog_version);
            for (statement, counts) in &report.summary {
                text.push_str(&format!(
                    "{statement}: {} checked, {} held, {} n/a, {} failed\n",
                    counts.checked, counts.held, counts.not_applicable, counts.failed
                ));
            }
            for failure in &report.failures {
                text.push_str(&format!(
                    "FAILED {} on {}\n",
                    failure.statement_id,
                    failure
                        .spec
                        .as_ref()
                        .map(|s| s.to_string())
                        .unwrap_or_default()
                ));
            }
            text
        }
    };
    emit(output, &text)?;
    Ok(if report.failure_count() > 0 {
        EXIT_STATEMENT_FAILURE
    } else {
        0
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build {
            source,
            caps,
            format,
            output,
        } => cmd_build(source, caps, *format, output),
        Command::Graph {
            source,
            caps,
            reduced,
            format,
            output,
        } => cmd_graph(source, caps, *reduced, *format, output),
        Command::Analyze {
            source,
            caps,
            format,
            output,
        } => cmd_analyze(source, caps, *format, output),
        Command::Check {
            source,
            caps,
            statements,
            format,
            output,
        } => cmd_check(source, caps, statements, *format, output),
        Command::Sweep {
            catalog,
            caps,
            statements,
            fast,
            timings,
            format,
            output,
        } => cmd_sweep(catalog, caps, statements, *fast, *timings, *format, output),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
