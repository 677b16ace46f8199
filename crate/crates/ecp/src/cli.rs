//! The `ecp` command line: thin adapters from a subcommand grammar to the
//! library, with a uniform JSON report on stdout and a one-line human
//! summary on stderr.
//!
//! Every invocation prints a single [`RunReport`] whose `payload` is the
//! command-specific result documented on each subcommand below. Graph
//! inputs come from `--input PATH` (format inferred from the `.g6`, `.el`,
//! or `.json` extension unless `--format` overrides it) or from `--stdin`
//! (which requires `--format`). Exit codes: 0 success, 1 domain error,
//! 2 budget or capability limit, 3 usage error.

use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::cliques::{self, CliquePartition, SearchOptions};
use crate::error::{Error, Result};
use crate::family::{partition_from_rep, rep_from_partition, SetFamily};
use crate::graph::format::{parse_graph, to_graph6, Format};
use crate::graph::{self, Graph, Multigraph};
use crate::linear::{enumerate_linear_spaces, projective_plane};
use crate::linegraph::{detect_exclusions, leaf_stats, ExclusionConfig, Regime};
use crate::omega::{enumerate_min_reps, omega_exact, OmegaOptions};
use crate::report::{digest_hex, BudgetCounters, RunReport};
use crate::verify::{run_suite, Suite, SuiteOptions};

const FORMATS: [&str; 3] = ["graph6", "edgelist", "json"];
const KINDS: [&str; 8] =
    ["m", "f", "a", "u", "multifamily", "family", "antichain", "uniform"];
const COUNTINGS: [&str; 3] = ["plan", "iso", "both"];
const SIDES: [&str; 2] = ["partition", "rep"];
const SUITES: [&str; 7] = [
    "dbe",
    "bridges",
    "kn-omega",
    "linegraph-cp",
    "linegraph-family",
    "linegraph-antichain",
    "bijection",
];

#[derive(Parser, Debug)]
#[command(
    name = "ecp",
    version,
    about = "Edge clique partitions, set representations, and intersection numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Where a graph comes from: exactly one of a file or standard input.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// File holding the graph; .g6/.el/.json extensions pick the format
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Read the graph from standard input (requires --format)
    #[arg(long, requires = "format")]
    stdin: bool,
}

#[derive(Args, Debug)]
struct FormatArg {
    /// Input format, overriding extension inference
    #[arg(long, value_parser = FORMATS)]
    format: Option<String>,
}

/// Where a JSON document comes from: exactly one of a file or stdin.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct JsonSource {
    /// File holding the JSON input
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Read the JSON input from standard input
    #[arg(long)]
    stdin: bool,
}

#[derive(Args, Debug)]
struct Common {
    /// Emit the JSON report on stdout (the default; accepted for symmetry)
    #[arg(long)]
    json: bool,
    /// Node budget for exhaustive searches
    #[arg(long, value_name = "N", default_value_t = 10_000_000)]
    budget: u64,
    /// Run fully deterministically (always true; accepted for symmetry)
    #[arg(long)]
    seedless: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact clique partition number; payload {"cp": N}
    Cp {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        format: FormatArg,
        /// Replace the input graph by its line graph first
        #[arg(long)]
        line_graph: bool,
        #[command(flatten)]
        common: Common,
    },
    /// List every clique partition up to a size bound (default: the minimum)
    EnumPartitions {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        format: FormatArg,
        /// Size bound; omitted means the clique partition number
        #[arg(long, value_name = "N")]
        max_size: Option<usize>,
        /// Forbid trivial one-vertex cliques
        #[arg(long)]
        nontrivial: bool,
        /// Forbid the clique on all vertices
        #[arg(long)]
        proper: bool,
        /// Replace the input graph by its line graph first
        #[arg(long)]
        line_graph: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Intersection number of one kind; payload {"omega": N} plus a census
    /// under --enumerate
    Omega {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        format: FormatArg,
        /// Representation kind: m, f, a, or u
        #[arg(long, value_parser = KINDS)]
        kind: String,
        /// Also enumerate all minimum representations
        #[arg(long)]
        enumerate: bool,
        /// Which census counts to report: plan, iso, or both
        #[arg(long, value_parser = COUNTINGS, default_value = "both")]
        counting: String,
        /// Replace the input graph by its line graph first
        #[arg(long)]
        line_graph: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Inspect a set family: kinds, intersection host, monopolized elements
    Reps {
        #[command(flatten)]
        source: JsonSource,
        #[command(flatten)]
        common: Common,
    },
    /// Construct the line graph, with vertex-to-edge correspondence
    LineGraph {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        format: FormatArg,
        /// Include leaf statistics and theorem-exclusion flags (connected
        /// inputs only)
        #[arg(long)]
        stats: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Construct PG(2,k), optionally deleting a point
    Plane {
        /// Plane order; construction exists for 2, 3, 4, 5, 7, 8, 9
        #[arg(long, value_name = "K")]
        order: u64,
        /// Delete this point, yielding the truncated plane
        #[arg(long, value_name = "P")]
        delete_point: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Enumerate all linear spaces with given point and line counts
    Spaces {
        /// Number of points (at most 7)
        #[arg(long, value_name = "N")]
        points: usize,
        /// Number of lines
        #[arg(long, value_name = "L")]
        lines: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Convert a clique partition to a set representation or back
    Convert {
        #[command(flatten)]
        source: JsonSource,
        /// Input side: partition {"host": {...}, "cliques": [...]} or rep
        /// {"ground": P, "sets": [...]}
        #[arg(long = "from", value_parser = SIDES)]
        from_side: String,
        /// Output side; must differ from --from
        #[arg(long = "to", value_parser = SIDES)]
        to_side: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run one theorem-verification suite
    Verify {
        /// Suite name
        #[arg(long, value_parser = SUITES)]
        suite: String,
        /// Ceiling on the sizes the suite sweeps
        #[arg(long, value_name = "N")]
        max_n: Option<usize>,
        /// JSON file of extra corpus graphs: [{"name": ..., "graph6": ...}]
        #[arg(long, value_name = "PATH")]
        corpus: Option<PathBuf>,
        /// Include the heavyweight optional cases
        #[arg(long)]
        extended: bool,
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Cp { common, .. }
            | Command::EnumPartitions { common, .. }
            | Command::Omega { common, .. }
            | Command::Reps { common, .. }
            | Command::LineGraph { common, .. }
            | Command::Plane { common, .. }
            | Command::Spaces { common, .. }
            | Command::Convert { common, .. }
            | Command::Verify { common, .. } => common,
        }
    }
}

/// Parse and run, printing the report to stdout and the summary to stderr.
pub fn run(argv: Vec<String>) -> i32 {
    let exec = execute(&argv);
    if let Some(text) = &exec.stdout {
        println!("{text}");
    }
    for line in &exec.stderr {
        eprintln!("{line}");
    }
    exec.exit
}

/// One finished invocation, not yet printed. Tests call this directly.
struct Exec {
    exit: i32,
    stdout: Option<String>,
    stderr: Vec<String>,
}

/// What a subcommand hands back to the envelope printer.
struct CommandOutput {
    payload: Value,
    input_digest: Option<String>,
    summary: String,
    /// Nonzero when a structurally successful run still signals failure
    /// (verify with failing cases or an exhausted budget).
    exit: i32,
}

fn execute(argv: &[String]) -> Exec {
    let started = Instant::now();
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Exec { exit: 0, stdout: Some(rendered), stderr: Vec::new() }
                }
                _ => Exec {
                    exit: 3,
                    stdout: None,
                    stderr: vec![rendered.trim_end().to_string()],
                },
            };
        }
    };
    if let Command::Convert { from_side, to_side, .. } = &cli.command {
        if from_side == to_side {
            return Exec {
                exit: 3,
                stdout: None,
                stderr: vec![format!(
                    "error: --from {from_side} --to {to_side} is not a conversion; \
                     the sides must differ"
                )],
            };
        }
    }
    let budget = cli.command.common().budget;
    match dispatch(&cli.command) {
        Ok(out) => {
            let report = RunReport {
                command: argv.to_vec(),
                input_digest: out.input_digest,
                payload: out.payload,
                elapsed_ms: started.elapsed().as_millis(),
                budget: BudgetCounters { node_limit: budget },
            };
            let text = serde_json::to_string(&report)
                .expect("report serialization cannot fail");
            Exec { exit: out.exit, stdout: Some(text), stderr: vec![out.summary] }
        }
        Err(e) => {
            Exec { exit: e.exit_code(), stdout: None, stderr: vec![format!("error: {e}")] }
        }
    }
}

fn dispatch(command: &Command) -> Result<CommandOutput> {
    match command {
        Command::Cp { source, format, line_graph, common } => {
            let (g, digest) = load_graph(source, format, *line_graph)?;
            let opts = SearchOptions { budget: common.budget, ..SearchOptions::default() };
            let cp = cliques::cp_exact(&Multigraph::from(&g), &opts)?;
            Ok(CommandOutput {
                payload: json!({ "cp": cp }),
                input_digest: Some(digest),
                summary: format!("cp = {cp}"),
                exit: 0,
            })
        }
        Command::EnumPartitions {
            source,
            format,
            max_size,
            nontrivial,
            proper,
            line_graph,
            common,
        } => {
            let (g, digest) = load_graph(source, format, *line_graph)?;
            let host = Multigraph::from(&g);
            let opts = SearchOptions {
                nontrivial_only: *nontrivial,
                proper_only: *proper,
                budget: common.budget,
            };
            let bound = match max_size {
                Some(s) => *s,
                None => cliques::cp_exact(&host, &opts)?,
            };
            let partitions = cliques::enumerate_partitions(&host, bound, &opts)?;
            let listed: Vec<Value> = partitions.iter().map(partition_value).collect();
            Ok(CommandOutput {
                payload: json!({
                    "max_size": bound,
                    "count": listed.len(),
                    "partitions": listed,
                }),
                input_digest: Some(digest),
                summary: format!("{} partitions of size ≤ {bound}", listed.len()),
                exit: 0,
            })
        }
        Command::Omega { source, format, kind, enumerate, counting, line_graph, common } => {
            let (g, digest) = load_graph(source, format, *line_graph)?;
            let kind = kind.parse()?;
            let opts = OmegaOptions { budget: common.budget, ..OmegaOptions::default() };
            let mut payload;
            let omega;
            if *enumerate {
                let census = enumerate_min_reps(&g, kind, &opts)?;
                omega = census.omega;
                let mut c = serde_json::Map::new();
                c.insert("labeled".into(), census.labeled_count().into());
                if counting == "plan" || counting == "both" {
                    c.insert("counting_a".into(), census.counting_a.into());
                    let plans: Vec<Value> = census
                        .plans
                        .iter()
                        .map(|p| {
                            json!({
                                "base": partition_value(&p.base),
                                "additions": p.additions,
                            })
                        })
                        .collect();
                    c.insert("plans".into(), plans.into());
                }
                if counting == "iso" || counting == "both" {
                    c.insert("counting_b".into(), census.counting_b.into());
                }
                payload = json!({ "omega": omega, "census": Value::Object(c) });
            } else {
                omega = omega_exact(&g, kind, &opts)?;
                payload = json!({ "omega": omega });
            }
            if let Value::Object(map) = &mut payload {
                map.insert("kind".into(), kind.to_string().into());
            }
            Ok(CommandOutput {
                payload,
                input_digest: Some(digest),
                summary: format!("ω_{} = {omega}", &kind.to_string()[..1]),
                exit: 0,
            })
        }
        Command::Reps { source, .. } => {
            let bytes = read_json_bytes(source)?;
            let fam = SetFamily::from_json(&bytes)?;
            let flags = fam.classify();
            let mut kinds = Vec::new();
            if flags.multifamily {
                kinds.push("multifamily");
            }
            if flags.family {
                kinds.push("family");
            }
            if flags.antichain {
                kinds.push("antichain");
            }
            if flags.uniform {
                kinds.push("uniform");
            }
            let host = fam.intersection_multigraph();
            let summary = format!(
                "{} sets on ground {}: {}",
                fam.n(),
                fam.ground(),
                if kinds.is_empty() { "no kind attained".to_string() } else { kinds.join(" ") }
            );
            Ok(CommandOutput {
                payload: json!({
                    "ground": fam.ground(),
                    "n": fam.n(),
                    "sets": fam.sets_as_lists(),
                    "kinds": kinds,
                    "monopolized": fam.monopolized_elements(),
                    "host": multigraph_value(&host),
                }),
                input_digest: Some(digest_hex(&bytes)),
                summary,
                exit: 0,
            })
        }
        Command::LineGraph { source, format, stats, .. } => {
            let (g, digest) = load_graph(source, format, false)?;
            let (lg, index) = graph::line_graph(&g)?;
            let edge_pairs: Vec<[usize; 2]> =
                index.edges().iter().map(|&(u, v)| [u, v]).collect();
            let mut payload = json!({
                "n": lg.n(),
                "edges": lg.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
                "vertices": edge_pairs,
                "graph6": to_graph6(&lg),
            });
            if *stats {
                let stats = leaf_stats(&g)?;
                let exclusions =
                    detect_exclusions(&g, Regime::AntichainTheorem, &ExclusionConfig::default())?;
                let map = payload.as_object_mut().expect("object payload");
                map.insert("stats".into(), serde_json::to_value(&stats)?);
                map.insert("exclusions".into(), serde_json::to_value(&exclusions)?);
            }
            Ok(CommandOutput {
                summary: format!(
                    "L(G): {} vertices, {} edges",
                    lg.n(),
                    lg.edge_count()
                ),
                payload,
                input_digest: Some(digest),
                exit: 0,
            })
        }
        Command::Plane { order, delete_point, .. } => {
            let plane = projective_plane(*order)?;
            let (space, deleted) = match delete_point {
                Some(p) => (plane.delete_point(*p)?, Some(*p)),
                None => (plane.space().clone(), None),
            };
            let mut payload = json!({
                "order": order,
                "points": space.n(),
                "lines": space.lines(),
            });
            if let Some(p) = deleted {
                payload.as_object_mut().expect("object payload").insert(
                    "deleted_point".into(),
                    p.into(),
                );
            }
            Ok(CommandOutput {
                payload,
                input_digest: None,
                summary: match deleted {
                    Some(p) => format!(
                        "PG(2,{order}) minus point {p}: {} points, {} lines",
                        space.n(),
                        space.line_count()
                    ),
                    None => format!(
                        "PG(2,{order}): {} points, {} lines",
                        space.n(),
                        space.line_count()
                    ),
                },
                exit: 0,
            })
        }
        Command::Spaces { points, lines, .. } => {
            let spaces = enumerate_linear_spaces(*points, *lines)?;
            let listed: Vec<&[Vec<usize>]> = spaces.iter().map(|s| s.lines()).collect();
            Ok(CommandOutput {
                payload: json!({
                    "points": points,
                    "lines": lines,
                    "count": listed.len(),
                    "spaces": listed,
                }),
                input_digest: None,
                summary: format!(
                    "{} linear spaces on {points} points with {lines} lines",
                    listed.len()
                ),
                exit: 0,
            })
        }
        Command::Convert { source, from_side, .. } => {
            let bytes = read_json_bytes(source)?;
            let digest = Some(digest_hex(&bytes));
            if from_side == "partition" {
                let host = parse_host(&bytes)?;
                let q = CliquePartition::from_json(host, &bytes)?;
                let fam = rep_from_partition(&q)?;
                Ok(CommandOutput {
                    payload: json!({
                        "rep": { "ground": fam.ground(), "sets": fam.sets_as_lists() },
                    }),
                    input_digest: digest,
                    summary: format!(
                        "partition of {} cliques → representation on ground {}",
                        q.len(),
                        fam.ground()
                    ),
                    exit: 0,
                })
            } else {
                let fam = SetFamily::from_json(&bytes)?;
                let q = partition_from_rep(&fam)?;
                Ok(CommandOutput {
                    payload: json!({
                        "partition": {
                            "host": multigraph_value(q.host()),
                            "cliques": partition_value(&q),
                        },
                    }),
                    input_digest: digest,
                    summary: format!(
                        "representation on ground {} → partition of {} cliques",
                        fam.ground(),
                        q.len()
                    ),
                    exit: 0,
                })
            }
        }
        Command::Verify { suite, max_n, corpus, extended, common } => {
            let suite: Suite = suite.parse()?;
            let (extra, digest) = match corpus {
                Some(path) => {
                    let bytes = std::fs::read(path)?;
                    (parse_corpus(&bytes)?, Some(digest_hex(&bytes)))
                }
                None => (Vec::new(), None),
            };
            let opts = SuiteOptions {
                max_n: *max_n,
                extended: *extended,
                budget: common.budget,
                extra,
            };
            let report = run_suite(suite, &opts)?;
            let passed = report.cases.iter().filter(|c| c.pass).count();
            let exit = if report.budget_exhausted {
                2
            } else if !report.passed() {
                1
            } else {
                0
            };
            let summary = format!(
                "suite {suite}: {passed}/{} cases passed, {} discrepancies recorded{}",
                report.cases.len(),
                report.discrepancies.len(),
                if report.budget_exhausted { ", budget exhausted" } else { "" }
            );
            Ok(CommandOutput {
                payload: serde_json::to_value(&report)?,
                input_digest: digest,
                summary,
                exit,
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Input plumbing
// ---------------------------------------------------------------------------

fn read_stdin() -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    std::io::stdin().read_to_end(&mut buf)?;
    Ok(buf)
}

fn load_graph(
    source: &GraphSource,
    format: &FormatArg,
    line_graph: bool,
) -> Result<(Graph, String)> {
    let (bytes, fmt) = match &source.input {
        Some(path) => (std::fs::read(path)?, infer_format(path, &format.format)?),
        None => {
            let fmt = format
                .format
                .as_deref()
                .expect("clap enforces --format with --stdin")
                .parse()?;
            (read_stdin()?, fmt)
        }
    };
    let g = parse_graph(&bytes, fmt)?;
    let g = if line_graph { graph::line_graph(&g)?.0 } else { g };
    Ok((g, digest_hex(&bytes)))
}

fn infer_format(path: &Path, explicit: &Option<String>) -> Result<Format> {
    if let Some(name) = explicit {
        return name.parse();
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => Ok(Format::Graph6),
        Some("el") => Ok(Format::Edgelist),
        Some("json") => Ok(Format::Json),
        _ => Err(Error::Invalid(format!(
            "cannot infer a format from '{}'; pass --format",
            path.display()
        ))),
    }
}

fn read_json_bytes(source: &JsonSource) -> Result<Vec<u8>> {
    match &source.input {
        Some(path) => Ok(std::fs::read(path)?),
        None => read_stdin(),
    }
}

/// The `{"host": {"n": N, "pairs": [[u, v], [u, v, q], ...]}}` part of a
/// partition document; a pair without a multiplicity means `q = 1`.
fn parse_host(bytes: &[u8]) -> Result<Multigraph> {
    let doc: Value = serde_json::from_slice(bytes)?;
    let host = doc
        .get("host")
        .ok_or_else(|| Error::Invalid("partition input needs a \"host\" object".into()))?;
    let n = host
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Invalid("host needs an integer \"n\"".into()))?;
    let mut m = Multigraph::new(n as usize)?;
    let pairs = match host.get("pairs") {
        Some(v) => v
            .as_array()
            .ok_or_else(|| Error::Invalid("host \"pairs\" must be an array".into()))?,
        None => return Ok(m),
    };
    for entry in pairs {
        let nums: Option<Vec<u64>> = entry
            .as_array()
            .map(|a| a.iter().map(Value::as_u64).collect::<Option<Vec<_>>>())
            .flatten();
        let nums = nums.ok_or_else(|| {
            Error::Invalid("each host pair must be [u, v] or [u, v, q]".into())
        })?;
        let (u, v, q) = match nums.as_slice() {
            [u, v] => (*u, *v, 1),
            [u, v, q] => (*u, *v, *q),
            _ => {
                return Err(Error::Invalid(
                    "each host pair must be [u, v] or [u, v, q]".into(),
                ))
            }
        };
        m.set_q(u as usize, v as usize, q as u32)?;
    }
    Ok(m)
}

/// Corpus file for `verify --corpus`: `[{"name": ..., "graph6": ...}, ...]`.
fn parse_corpus(bytes: &[u8]) -> Result<Vec<(String, Graph)>> {
    let doc: Value = serde_json::from_slice(bytes)?;
    let entries = doc
        .as_array()
        .ok_or_else(|| Error::Invalid("corpus file must be a JSON array".into()))?;
    let mut out = Vec::new();
    for entry in entries {
        let name = entry
            .get("name")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Invalid("corpus entry needs a \"name\" string".into()))?;
        let text = entry
            .get("graph6")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Invalid("corpus entry needs a \"graph6\" string".into()))?;
        out.push((name.to_string(), parse_graph(text.as_bytes(), Format::Graph6)?));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Payload pieces
// ---------------------------------------------------------------------------

fn partition_value(q: &CliquePartition) -> Value {
    let cliques: Vec<&[usize]> = q.cliques().iter().map(|c| c.vertices()).collect();
    json!(cliques)
}

fn multigraph_value(m: &Multigraph) -> Value {
    let mut pairs = Vec::new();
    for u in 0..m.n() {
        for v in u + 1..m.n() {
            let q = m.q(u, v);
            if q > 0 {
                pairs.push(json!([u, v, q]));
            }
        }
    }
    json!({ "n": m.n(), "pairs": pairs })
}
