//! `orbitals` command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 input error, 3 when the futility
//! deciders disagree.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orbitals::io::{self, Method, TraceDocument, VerdictDocument};
use orbitals::{
    arc_count_bounds, build_orbital_graph, enumerate_base_pairs, enumerate_distinct_base_pairs, find_witness,
    is_futile_fast, is_futile_oracle, is_futile_structural, is_self_paired, isolated_vertices, refine_by_graph,
    weak_components, AnalysisReport, Error, OrderedPartition, PermGroup,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "orbitals", version, about = "Orbital graphs of permutation groups and their futility")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Orbits, order and transitivity degree of a group
    Orbits(GroupArg),
    /// Build one orbital graph
    Graph {
        #[command(flatten)]
        input: GroupArg,
        #[arg(long, value_parser = parse_pair)]
        pair: (usize, usize),
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// One base-pair per orbital graph
    BasePairs {
        #[command(flatten)]
        input: GroupArg,
        /// Drop pairs whose graph repeats an earlier one
        #[arg(long)]
        dedup: bool,
    },
    /// Decide futility of one or all orbital graphs
    Futility {
        #[command(flatten)]
        input: GroupArg,
        #[arg(long, value_parser = parse_pair)]
        pair: Option<(usize, usize)>,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        #[arg(long)]
        json: bool,
    },
    /// Refine a partition with an orbital graph
    Refine {
        #[command(flatten)]
        input: GroupArg,
        #[arg(long, value_parser = parse_pair)]
        pair: (usize, usize),
        #[arg(long, value_enum, default_value_t = StartPartition::Orbit)]
        partition: StartPartition,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct GroupArg {
    /// Group file: `degree: n`, then one generator per line
    file: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Fast,
    Structural,
    Oracle,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StartPartition {
    Unit,
    Orbit,
}

fn parse_pair(text: &str) -> Result<(usize, usize), String> {
    let (a, b) = text.split_once(',').ok_or("expected a,b")?;
    let point = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("bad point {s:?}"));
    Ok((point(a)?, point(b)?))
}

enum Failure {
    Input(Error),
    Disagreement(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

/// Runs the tool on `args` (including the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut buffer = String::new();
    let result = execute(cli.command, &mut buffer);
    let _ = out.write_all(buffer.as_bytes());
    finish(result, err)
}

fn finish(result: Result<(), Failure>, err: &mut dyn Write) -> i32 {
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
        Err(Failure::Disagreement(msg)) => {
            let _ = writeln!(err, "internal error: futility methods disagree: {msg}");
            EXIT_DISAGREEMENT
        }
    }
}

fn execute(command: Command, out: &mut String) -> Result<(), Failure> {
    match command {
        Command::Orbits(input) => {
            let group = io::read_group(&input.file)?;
            orbits(&group, out);
        }
        Command::Graph { input, pair, dot, json } => {
            let group = io::read_group(&input.file)?;
            let graph = build_orbital_graph(&group, pair.0, pair.1)?;
            if dot {
                out.push_str(&io::to_dot(&graph));
            } else if json {
                let _ = writeln!(out, "{}", io::graph_to_json(&graph));
            } else {
                let arcs: Vec<String> = graph.arcs().iter().map(|(x, y)| format!("{x}->{y}")).collect();
                let _ = writeln!(out, "base-pair: ({},{})", pair.0, pair.1);
                let _ = writeln!(out, "arcs ({}): {}", graph.arc_count(), arcs.join(" "));
                let _ = writeln!(out, "isolated: {}", join(&isolated_vertices(&graph)));
                let _ = writeln!(out, "self-paired: {}", is_self_paired(&graph));
                let _ = writeln!(out, "components: {}", cells(weak_components(&graph).cells()));
            }
        }
        Command::BasePairs { input, dedup } => {
            let group = io::read_group(&input.file)?;
            let pairs = if dedup {
                enumerate_distinct_base_pairs(&group)
            } else {
                enumerate_base_pairs(&group)
            };
            for (a, b) in pairs {
                let _ = writeln!(out, "{a},{b}");
            }
        }
        Command::Futility { input, pair, method, json } => {
            let group = io::read_group(&input.file)?;
            match pair {
                Some(pair) => futility_single(&group, pair, method, json, out)?,
                None => futility_all(&group, method, json, out)?,
            }
        }
        Command::Refine { input, pair, partition, json } => {
            let group = io::read_group(&input.file)?;
            let graph = build_orbital_graph(&group, pair.0, pair.1)?;
            let start = match partition {
                StartPartition::Unit => OrderedPartition::unit(group.degree()),
                StartPartition::Orbit => group.orbit_partition(),
            };
            let trace = refine_by_graph(&start, &graph)?;
            if json {
                let doc = TraceDocument::from(&trace);
                let _ = writeln!(out, "{}", serde_json::to_string(&doc).expect("serializable"));
            } else {
                let _ = writeln!(out, "base-pair: ({},{})", pair.0, pair.1);
                let _ = writeln!(out, "before: {}", cells(trace.input.cells()));
                let _ = writeln!(out, "after:  {}", cells(trace.output.cells()));
                let _ = writeln!(out, "rounds: {}  split_count: {}", trace.rounds, trace.split_count);
            }
        }
    }
    Ok(())
}

fn orbits(group: &PermGroup, out: &mut String) {
    let _ = writeln!(out, "degree: {}", group.degree());
    let _ = writeln!(out, "order: {}", group.order());
    let _ = writeln!(out, "transitivity degree: {}", group.transitivity_degree());
    let _ = writeln!(out, "orbits: {}", cells(group.orbit_partition().cells()));
}

fn futility_single(
    group: &PermGroup,
    (a, b): (usize, usize),
    method: MethodArg,
    json: bool,
    out: &mut String,
) -> Result<(), Failure> {
    let bounds = arc_count_bounds(group, a, b)?;
    let mut docs = Vec::new();
    if matches!(method, MethodArg::Fast | MethodArg::All) {
        let futile = is_futile_fast(group, a, b)?;
        docs.push(VerdictDocument::new((a, b), Method::Fast, futile, None, None, &bounds));
    }
    if method != MethodArg::Fast {
        let graph = build_orbital_graph(group, a, b)?;
        if matches!(method, MethodArg::Structural | MethodArg::All) {
            let verdict = is_futile_structural(&graph, group)?;
            docs.push(VerdictDocument::structural((a, b), &verdict, &bounds));
        }
        if matches!(method, MethodArg::Oracle | MethodArg::All) {
            let futile = is_futile_oracle(&graph, group)?;
            let witness = if futile { None } else { find_witness(&graph, group) };
            docs.push(VerdictDocument::new((a, b), Method::Oracle, futile, None, witness.as_ref(), &bounds));
        }
    }
    if json {
        let text = if docs.len() == 1 {
            serde_json::to_string(&docs[0])
        } else {
            serde_json::to_string(&docs)
        };
        let _ = writeln!(out, "{}", text.expect("serializable"));
    } else {
        for d in &docs {
            let _ = write!(
                out,
                "({a},{b}) {:<10} futile={:<5} shape={} arcs={} threshold={}",
                method_name(d.method),
                d.futile,
                d.shape,
                d.arc_count,
                d.thresholds.threshold
            );
            if let Some(w) = &d.witness {
                let _ = write!(
                    out,
                    " witness={} breaks ({},{})",
                    w.permutation_cycles, w.violated_arc[0], w.violated_arc[1]
                );
            }
            out.push('\n');
        }
    }
    if docs.windows(2).any(|w| w[0].futile != w[1].futile) {
        let verdicts: Vec<String> = docs
            .iter()
            .map(|d| format!("{}={}", method_name(d.method), d.futile))
            .collect();
        return Err(Failure::Disagreement(format!("pair ({a},{b}): {}", verdicts.join(" "))));
    }
    Ok(())
}

fn futility_all(group: &PermGroup, method: MethodArg, json: bool, out: &mut String) -> Result<(), Failure> {
    let report = AnalysisReport::new(group, false)?;
    let pick = |row: &orbitals::ReportRow| match method {
        MethodArg::Fast => row.fast,
        MethodArg::Structural => row.structural,
        MethodArg::Oracle | MethodArg::All => row.oracle,
    };
    if json {
        let _ = writeln!(out, "{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        orbits(group, out);
        let _ = writeln!(
            out,
            "{:<8} {:>5} {:<11} {:<6} {:<10} {:<6} {:<18} components",
            "pair", "arcs", "self-paired", "fast", "structural", "oracle", "shape"
        );
        for row in &report.rows {
            let (a, b) = row.base_pair;
            let show = |v: bool, m: MethodArg| {
                if method == MethodArg::All || method == m {
                    v.to_string()
                } else {
                    "-".to_string()
                }
            };
            let _ = writeln!(
                out,
                "{:<8} {:>5} {:<11} {:<6} {:<10} {:<6} {:<18} {}",
                format!("{a},{b}"),
                row.arc_count,
                row.self_paired,
                show(row.fast, MethodArg::Fast),
                show(row.structural, MethodArg::Structural),
                show(row.oracle, MethodArg::Oracle),
                if method == MethodArg::All || method == MethodArg::Structural {
                    row.shape
                } else if pick(row) {
                    "futile"
                } else {
                    "not-futile"
                },
                join(&row.component_sizes)
            );
        }
    }
    if method == MethodArg::All {
        if let Some(row) = report.disagreements().next() {
            return Err(Failure::Disagreement(format!(
                "pair ({},{}): fast={} structural={} oracle={}",
                row.base_pair.0, row.base_pair.1, row.fast, row.structural, row.oracle
            )));
        }
    }
    Ok(())
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Fast => "fast",
        Method::Structural => "structural",
        Method::Oracle => "oracle",
    }
}

fn join(points: &[usize]) -> String {
    points.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn cells(cells: &[Vec<usize>]) -> String {
    let inner: Vec<String> = cells.iter().map(|c| join(c)).collect();
    format!("[{}]", inner.join(" | "))
}
