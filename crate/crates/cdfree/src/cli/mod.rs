//! Command-line surface: `solve`, `kernelize`, `check`, `bags`, `oracle`,
//! `gen` and `bench`.
//!
//! Exit codes: 0 = YES/success, 1 = NO, 2 = usage or input error,
//! 3 = internal invariant error, 4 = oracle capacity exceeded.

pub mod format;
pub mod gen;

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bags::{classify_bags, compute_bags, BagRole, SizeClass};
use crate::forbidden::{cd_witness, is_cd_free, ForbiddenSubgraph};
use crate::graph::{EdgeSet, Graph, VertexId};
use crate::kernel::{kernelize, Instance, KernelAudit, KernelOutcome};
use crate::oracle::{brute_min_cdh_bounded, OracleError, DEFAULT_WORK_BOUND};
use crate::solver::{solve_with_options, SolveOutcome};

pub use format::{parse_graph, write_graph, GraphDocument, ParseError};
pub use gen::{gen_graph, GenError, GenModel};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Answer {
    Yes,
    No,
    TrivialNo,
    CapacityExceeded,
}

impl Answer {
    fn as_str(self) -> &'static str {
        match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::TrivialNo => "trivial-no",
            Answer::CapacityExceeded => "capacity-exceeded",
        }
    }

    fn exit_code(self) -> i32 {
        match self {
            Answer::Yes => 0,
            Answer::No | Answer::TrivialNo => 1,
            Answer::CapacityExceeded => 4,
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct RunStats {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes_expanded: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_depth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_size: Option<usize>,
    pub millis: u128,
}

/// The machine-readable result of `solve` and `oracle`.
#[derive(Debug, Serialize)]
pub struct ResultDocument {
    pub answer: Answer,
    pub k: usize,
    pub deleted_edges: Vec<(VertexId, VertexId)>,
    pub stats: RunStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audit: Option<KernelAudit>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Gnm,
    LineOfBipartite,
    Planted,
}

#[derive(Parser)]
#[command(
    name = "cdfree",
    about = "Exact solver toolkit for {claw, diamond}-free edge deletion",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether k deletions suffice, or find the minimum with --min.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(short, long)]
        k: usize,
        /// Search the raw instance without kernelizing first.
        #[arg(long)]
        no_kernel: bool,
        /// Treat k as a cap and report the smallest working budget.
        #[arg(long)]
        min: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Run the reduction rules and emit the kernel plus its audit.
    Kernelize {
        #[arg(long)]
        input: PathBuf,
        #[arg(short, long)]
        k: usize,
        /// Also write the kernel graph to this file.
        #[arg(long)]
        graph_out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Report whether the graph is {claw, diamond}-free, with a witness.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Print the bag decomposition of a {claw, diamond}-free graph.
    Bags {
        #[arg(long)]
        input: PathBuf,
        /// Budget used to annotate small/big size classes.
        #[arg(short, long)]
        k: Option<usize>,
    },
    /// Exhaustive minimum search (ground truth, exponential).
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(short, long)]
        k: usize,
        /// Ceiling on the number of cd-freeness checks.
        #[arg(long, default_value_t = DEFAULT_WORK_BOUND)]
        work_bound: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Generate an instance deterministically from a seed.
    Gen {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertex count (gnm).
        #[arg(long)]
        n: Option<usize>,
        /// Edge count (gnm).
        #[arg(long)]
        m: Option<usize>,
        /// Left part size (line-of-bipartite, planted).
        #[arg(long)]
        left: Option<usize>,
        /// Right part size (line-of-bipartite, planted).
        #[arg(long)]
        right: Option<usize>,
        /// Base bipartite edge count (line-of-bipartite, planted).
        #[arg(long)]
        base_edges: Option<usize>,
        /// Number of planted forbidden subgraphs (planted).
        #[arg(long)]
        planted: Option<usize>,
        /// Write to a file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run every `.g` instance in a directory through the solver and the
    /// oracle; emit one CSV row per instance.
    Bench {
        #[arg(long)]
        dir: PathBuf,
        #[arg(short, long)]
        k: usize,
        #[arg(long)]
        no_kernel: bool,
    },
}

enum CliError {
    Input(String),
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Internal(m) => m,
        }
    }
}

/// Entry point used by the binary: parses `argv` and runs the command,
/// writing to the real stdout/stderr.
pub fn run(args: &[String]) -> i32 {
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    run_with_writers(args, &mut out, &mut err)
}

/// Like [`run`] but with injectable output streams; tests use buffers.
pub fn run_with_writers(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Solve {
            input,
            k,
            no_kernel,
            min,
            format,
        } => cmd_solve(&input, k, !no_kernel, min, format, out),
        Command::Kernelize {
            input,
            k,
            graph_out,
            format,
        } => cmd_kernelize(&input, k, graph_out.as_deref(), format, out),
        Command::Check { input, format } => cmd_check(&input, format, out),
        Command::Bags { input, k } => cmd_bags(&input, k, out),
        Command::Oracle {
            input,
            k,
            work_bound,
            format,
        } => cmd_oracle(&input, k, work_bound, format, out),
        Command::Gen {
            model,
            seed,
            n,
            m,
            left,
            right,
            base_edges,
            planted,
            output,
        } => cmd_gen(
            model, seed, n, m, left, right, base_edges, planted, output, out,
        ),
        Command::Bench { dir, k, no_kernel } => cmd_bench(&dir, k, !no_kernel, out),
    }
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit_result(
    doc: &ResultDocument,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        OutputFormat::Json => {
            let line = serde_json::to_string(doc)
                .map_err(|e| CliError::Internal(format!("serialize result: {e}")))?;
            writeln!(out, "{line}").map_err(|e| CliError::Internal(e.to_string()))?;
        }
        OutputFormat::Text => {
            writeln!(out, "answer: {}", doc.answer.as_str())
                .map_err(|e| CliError::Internal(e.to_string()))?;
            let mut line = String::new();
            for &(u, v) in &doc.deleted_edges {
                line.push_str(&format!(" ({u},{v})"));
            }
            writeln!(out, "k: {}", doc.k).map_err(|e| CliError::Internal(e.to_string()))?;
            writeln!(out, "deleted:{line}").map_err(|e| CliError::Internal(e.to_string()))?;
            if let Some(s) = doc.stats.min_size {
                writeln!(out, "min-size: {s}").map_err(|e| CliError::Internal(e.to_string()))?;
            }
            if let Some(n) = doc.stats.nodes_expanded {
                writeln!(out, "nodes: {n}").map_err(|e| CliError::Internal(e.to_string()))?;
            }
            writeln!(out, "millis: {}", doc.stats.millis)
                .map_err(|e| CliError::Internal(e.to_string()))?;
        }
    }
    Ok(())
}

/// Re-checks a YES certificate against the graph it claims to clean.
fn verify_witness(g: &Graph, deleted: &EdgeSet, k: usize) -> Result<(), CliError> {
    if deleted.len() > k {
        return Err(CliError::Internal(format!(
            "certificate has {} deletions for budget {k}",
            deleted.len()
        )));
    }
    let cleaned = g
        .delete_edges(deleted)
        .map_err(|e| CliError::Internal(format!("certificate names an absent edge: {e}")))?;
    if !is_cd_free(&cleaned) {
        return Err(CliError::Internal(
            "certificate does not clean the graph".to_string(),
        ));
    }
    Ok(())
}

fn cmd_solve(
    input: &Path,
    k: usize,
    use_kernel: bool,
    min: bool,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let g = load_graph(input)?;
    let started = Instant::now();

    let mut found: Option<(usize, SolveOutcome)> = None;
    let mut last: Option<SolveOutcome> = None;
    let budgets: Vec<usize> = if min { (0..=k).collect() } else { vec![k] };
    for budget in budgets {
        let outcome = solve_with_options(&Instance::new(g.clone(), budget), use_kernel)
            .map_err(|e| CliError::Internal(e.to_string()))?;
        if outcome.solution.is_some() {
            found = Some((budget, outcome));
            break;
        }
        last = Some(outcome);
    }
    let millis = started.elapsed().as_millis();

    let doc = match found {
        Some((budget, outcome)) => {
            let solution = outcome.solution.as_ref().expect("found implies solution");
            verify_witness(&outcome.solved.graph, &solution.deleted, budget)?;
            ResultDocument {
                answer: Answer::Yes,
                k,
                deleted_edges: solution.deleted.iter().map(|e| e.endpoints()).collect(),
                stats: RunStats {
                    nodes_expanded: Some(solution.stats.nodes_expanded),
                    max_depth: Some(solution.stats.max_depth),
                    min_size: min.then_some(budget),
                    millis,
                },
                audit: outcome.audit,
            }
        }
        None => {
            let outcome = last.expect("at least one budget was tried");
            ResultDocument {
                answer: if outcome.trivial_no {
                    Answer::TrivialNo
                } else {
                    Answer::No
                },
                k,
                deleted_edges: Vec::new(),
                stats: RunStats {
                    millis,
                    ..RunStats::default()
                },
                audit: outcome.audit,
            }
        }
    };
    emit_result(&doc, format, out)?;
    Ok(doc.answer.exit_code())
}

fn cmd_kernelize(
    input: &Path,
    k: usize,
    graph_out: Option<&Path>,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let g = load_graph(input)?;
    let outcome = kernelize(Instance::new(g, k)).map_err(|e| CliError::Internal(e.to_string()))?;
    let (label, instance, audit): (&str, &Instance, Option<&KernelAudit>) = match &outcome {
        KernelOutcome::Reduced { instance, audit } => ("reduced", instance, Some(audit)),
        KernelOutcome::TrivialNo { instance } => ("trivial-no", instance, None),
    };

    if let Some(path) = graph_out {
        std::fs::write(path, write_graph(&instance.graph))
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }

    match format {
        OutputFormat::Json => {
            let doc = json!({
                "outcome": label,
                "k": instance.k,
                "audit": audit,
                "graph": GraphDocument::from(&instance.graph),
            });
            writeln!(out, "{doc}").map_err(|e| CliError::Internal(e.to_string()))?;
        }
        OutputFormat::Text => {
            writeln!(out, "# outcome: {label}").map_err(|e| CliError::Internal(e.to_string()))?;
            if let Some(audit) = audit {
                let line = serde_json::to_string(audit)
                    .map_err(|e| CliError::Internal(format!("serialize audit: {e}")))?;
                writeln!(out, "# audit: {line}").map_err(|e| CliError::Internal(e.to_string()))?;
            }
            write!(out, "{}", write_graph(&instance.graph))
                .map_err(|e| CliError::Internal(e.to_string()))?;
        }
    }
    Ok(if label == "reduced" { 0 } else { 1 })
}

fn witness_json(w: &ForbiddenSubgraph) -> serde_json::Value {
    match w {
        ForbiddenSubgraph::Claw { center, leaves } => json!({
            "kind": "claw",
            "center": center,
            "leaves": leaves,
        }),
        ForbiddenSubgraph::Diamond { chord, sides } => json!({
            "kind": "diamond",
            "chord": [chord.0, chord.1],
            "sides": [sides.0, sides.1],
        }),
    }
}

fn cmd_check(input: &Path, format: OutputFormat, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(input)?;
    let witness = cd_witness(&g);
    match format {
        OutputFormat::Json => {
            let doc = json!({
                "cd_free": witness.is_none(),
                "witness": witness.as_ref().map(witness_json),
            });
            writeln!(out, "{doc}").map_err(|e| CliError::Internal(e.to_string()))?;
        }
        OutputFormat::Text => match &witness {
            None => writeln!(out, "cd-free").map_err(|e| CliError::Internal(e.to_string()))?,
            Some(ForbiddenSubgraph::Claw { center, leaves }) => {
                writeln!(
                    out,
                    "claw: center {center} leaves {} {} {}",
                    leaves[0], leaves[1], leaves[2]
                )
                .map_err(|e| CliError::Internal(e.to_string()))?;
            }
            Some(ForbiddenSubgraph::Diamond { chord, sides }) => {
                writeln!(
                    out,
                    "diamond: chord ({},{}) sides ({},{})",
                    chord.0, chord.1, sides.0, sides.1
                )
                .map_err(|e| CliError::Internal(e.to_string()))?;
            }
        },
    }
    Ok(if witness.is_none() { 0 } else { 1 })
}

fn cmd_bags(input: &Path, k: Option<usize>, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(input)?;
    let bs = compute_bags(&g).map_err(|e| CliError::Input(format!("{}: {e}", input.display())))?;
    let infos = classify_bags(&g, &BTreeSet::new(), &bs, k.unwrap_or(0))
        .map_err(|e| CliError::Internal(e.to_string()))?;
    for info in &infos {
        let bag = &bs.bags[info.bag_index];
        let role = match info.role {
            BagRole::Attached => "attached",
            BagRole::Border => "border",
            BagRole::Outlier => "outlier",
        };
        let mut line = format!("bag {}: {} role={role}", info.bag_index, bag);
        if k.is_some() {
            let size = match info.size_class {
                SizeClass::Small => "small",
                SizeClass::Big => "big",
            };
            line.push_str(&format!(" size={size}"));
        }
        writeln!(out, "{line}").map_err(|e| CliError::Internal(e.to_string()))?;
    }
    Ok(0)
}

fn cmd_oracle(
    input: &Path,
    k: usize,
    work_bound: u64,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let g = load_graph(input)?;
    let started = Instant::now();
    let result = brute_min_cdh_bounded(&g, k, work_bound);
    let millis = started.elapsed().as_millis();
    let doc = match result {
        Ok(Some((size, set))) => {
            verify_witness(&g, &set, k)?;
            ResultDocument {
                answer: Answer::Yes,
                k,
                deleted_edges: set.iter().map(|e| e.endpoints()).collect(),
                stats: RunStats {
                    min_size: Some(size),
                    millis,
                    ..RunStats::default()
                },
                audit: None,
            }
        }
        Ok(None) => ResultDocument {
            answer: Answer::No,
            k,
            deleted_edges: Vec::new(),
            stats: RunStats {
                millis,
                ..RunStats::default()
            },
            audit: None,
        },
        Err(OracleError::CapacityExceeded { .. }) => ResultDocument {
            answer: Answer::CapacityExceeded,
            k,
            deleted_edges: Vec::new(),
            stats: RunStats {
                millis,
                ..RunStats::default()
            },
            audit: None,
        },
    };
    emit_result(&doc, format, out)?;
    Ok(doc.answer.exit_code())
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    model: ModelArg,
    seed: u64,
    n: Option<usize>,
    m: Option<usize>,
    left: Option<usize>,
    right: Option<usize>,
    base_edges: Option<usize>,
    planted: Option<usize>,
    output: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| CliError::Input(format!("--{flag} is required for this model")))
    };
    let model = match model {
        ModelArg::Gnm => GenModel::Gnm {
            n: need(n, "n")?,
            m: need(m, "m")?,
        },
        ModelArg::LineOfBipartite => GenModel::LineOfBipartite {
            left: need(left, "left")?,
            right: need(right, "right")?,
            base_edges: need(base_edges, "base-edges")?,
        },
        ModelArg::Planted => GenModel::Planted {
            left: need(left, "left")?,
            right: need(right, "right")?,
            base_edges: need(base_edges, "base-edges")?,
            planted: need(planted, "planted")?,
        },
    };
    let g = gen_graph(&model, seed).map_err(|e| CliError::Input(e.to_string()))?;
    let text = write_graph(&g);
    match output {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?,
        None => write!(out, "{text}").map_err(|e| CliError::Internal(e.to_string()))?,
    }
    Ok(0)
}

fn cmd_bench(dir: &Path, k: usize, use_kernel: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "g"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(CliError::Input(format!(
            "{}: no .g instances found",
            dir.display()
        )));
    }

    writeln!(out, "name,n,m,k,solver-answer,oracle-answer,nodes,millis")
        .map_err(|e| CliError::Internal(e.to_string()))?;

    let mut mismatch = false;
    let mut capacity = false;
    for path in &paths {
        let g = load_graph(path)?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());

        let started = Instant::now();
        let outcome = solve_with_options(&Instance::new(g.clone(), k), use_kernel)
            .map_err(|e| CliError::Internal(e.to_string()))?;
        let millis = started.elapsed().as_millis();
        let solver_yes = outcome.solution.is_some();
        let solver_answer = if solver_yes { "yes" } else { "no" };
        let nodes = outcome
            .solution
            .as_ref()
            .map(|s| s.stats.nodes_expanded)
            .unwrap_or(0);

        let oracle_answer = match brute_min_cdh_bounded(&g, k, DEFAULT_WORK_BOUND) {
            Ok(Some(_)) => "yes",
            Ok(None) => "no",
            Err(OracleError::CapacityExceeded { .. }) => {
                capacity = true;
                "capacity"
            }
        };
        if oracle_answer != "capacity" && oracle_answer != solver_answer {
            mismatch = true;
        }

        writeln!(
            out,
            "{name},{},{},{k},{solver_answer},{oracle_answer},{nodes},{millis}",
            g.vertex_count(),
            g.edge_count()
        )
        .map_err(|e| CliError::Internal(e.to_string()))?;
    }

    if mismatch {
        return Err(CliError::Internal(
            "solver and oracle disagreed on at least one instance".to_string(),
        ));
    }
    Ok(if capacity { 4 } else { 0 })
}
