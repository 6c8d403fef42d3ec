//! The `loctime` command line.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::decomposition::{interval_clique_path, minfill_td, td_stats, validate_td, TreeDecomposition};
use crate::generators::Family;
use crate::graph::Graph;
use crate::solver::{
    localization_number, metric_dimension, solve_capture_time, Budget, Outcome, Pruning, SolveOptions, SCHEMA_VERSION,
};
use crate::strategy::{evaluate_strategy, parse_strategy};
use crate::verify::{run_suite, to_csv, VerifyConfig};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "loctime", version, about = "Capture times and cop strategies for the localization game")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a generated graph as an edge list.
    Gen(GenArgs),
    /// Exact capture time with a fixed number of cops.
    Solve(SolveArgs),
    /// Localization number: least number of cops with a finite capture time.
    Locnum(LocnumArgs),
    /// Metric dimension and a least resolving set.
    Mdim(MdimArgs),
    /// Worst case of a named strategy against every robber.
    Eval(EvalArgs),
    /// Tree or path decomposition of a graph.
    Decompose(DecomposeArgs),
    /// Check the known values and bounds.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct GraphArgs {
    /// Edge-list file: a header `n m`, then one `u v` pair per line.
    #[arg(long, conflicts_with = "family")]
    pub graph: Option<PathBuf>,
    /// Generator name, e.g. star, mary, pg2, grid, random_tree.
    #[arg(long)]
    pub family: Option<String>,
    /// Generator parameters.
    #[arg(long, num_args = 1..)]
    pub params: Vec<String>,
    /// Seed for randomized generators.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct SolverArgs {
    #[arg(long, default_value_t = Budget::default().max_states)]
    pub budget_states: usize,
    #[arg(long, default_value_t = Budget::default().max_rounds)]
    pub max_rounds: u32,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Disable the exact search reductions.
    #[arg(long)]
    pub no_pruning: bool,
}

impl SolverArgs {
    fn options(&self, g: &Graph) -> SolveOptions {
        SolveOptions {
            budget: Budget { max_states: self.budget_states, max_rounds: self.max_rounds, ..Budget::default() },
            pruning: if self.no_pruning { Pruning::default() } else { Pruning::fast_for(g) },
            threads: self.threads,
        }
    }
}

#[derive(Args, Debug)]
pub struct GenArgs {
    /// Family name, as an alternative to --family.
    pub name: Option<String>,
    /// Family parameters, as an alternative to --params.
    #[arg(allow_hyphen_values = true)]
    pub positional: Vec<String>,
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long)]
    pub cops: usize,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct LocnumArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct MdimArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Give up after testing this many subsets.
    #[arg(long, default_value_t = 100_000_000)]
    pub max_subsets: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Strategy as `name[:key=value,...]`, e.g. `mary_low:m=3,h=2,k=2`.
    #[arg(long)]
    pub strategy: String,
    /// Round cap for the evaluation.
    #[arg(long, default_value_t = 100)]
    pub max_rounds: u32,
    /// Worker threads for the solve behind the `witness` strategy.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Minfill,
    Interval,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// `interval` needs `--family interval`.
    #[arg(long, value_enum, default_value_t = Method::Minfill)]
    pub method: Method,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(default_value = "paper")]
    pub suite: String,
    /// Comma-separated groups: star, fig2, grid, heawood, mary, soundness,
    /// monotone, invariants, kpartite, leaves.
    #[arg(long)]
    pub only: Option<String>,
    #[arg(long, default_value_t = Budget::default().max_states)]
    pub budget_states: usize,
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A failed command with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

fn usage(message: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_USAGE, message: message.to_string() }
}

/// A graph and the name it is reported under.
struct Loaded {
    graph: Graph,
    name: String,
    family: Option<Family>,
}

fn load(args: &GraphArgs) -> Result<Loaded, Failure> {
    match (&args.graph, &args.family) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let graph = Graph::parse_edge_list(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            Ok(Loaded { graph, name: path.display().to_string(), family: None })
        }
        (None, Some(name)) => {
            let family = Family::parse(name, &args.params, args.seed).map_err(usage)?;
            let graph = family.build().map_err(usage)?;
            let mut label = name.clone();
            for p in &args.params {
                label.push(':');
                label.push_str(p);
            }
            Ok(Loaded { graph, name: label, family: Some(family) })
        }
        _ => Err(usage("give exactly one of --graph PATH or --family NAME")),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json_line(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json");
    s.push('\n');
    s
}

fn csv_of(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn cmd_gen(args: &GenArgs) -> Result<u8, Failure> {
    let mut graph_args = args.graph.clone();
    if let Some(name) = &args.name {
        if graph_args.family.is_some() || graph_args.graph.is_some() {
            return Err(usage("give the family either positionally or with --family"));
        }
        graph_args.family = Some(name.clone());
        graph_args.params.extend(args.positional.iter().cloned());
    }
    let loaded = load(&graph_args)?;
    emit(&args.out, &loaded.graph.to_edge_list())?;
    Ok(EXIT_OK)
}

fn cmd_solve(args: &SolveArgs) -> Result<u8, Failure> {
    if args.cops == 0 {
        return Err(usage("--cops must be at least 1"));
    }
    let loaded = load(&args.graph)?;
    let result = solve_capture_time(&loaded.graph, args.cops, &args.solver.options(&loaded.graph));
    let value = result.to_json(&loaded.name);
    let text = match args.output.format {
        Format::Json => to_json_line(&value),
        Format::Csv => csv_of(
            &["schema_version", "graph", "k", "outcome", "capture_time", "states", "probes"],
            &[vec![
                SCHEMA_VERSION.to_string(),
                loaded.name.clone(),
                result.k.to_string(),
                result.outcome.label().to_string(),
                result.outcome.rounds().map_or(String::new(), |t| t.to_string()),
                result.stats.states.to_string(),
                result.stats.probes.to_string(),
            ]],
        ),
        Format::Text => match result.outcome {
            Outcome::Finite(t) => format!("{}: capture time {t} with {} cops\n", loaded.name, result.k),
            Outcome::RobberWins => format!("{}: robber evades {} cops forever\n", loaded.name, result.k),
            Outcome::Aborted(r) => format!("{}: aborted ({r})\n", loaded.name),
        },
    };
    emit(&args.output.out, &text)?;
    Ok(if matches!(result.outcome, Outcome::Aborted(_)) { EXIT_BUDGET } else { EXIT_OK })
}

fn cmd_locnum(args: &LocnumArgs) -> Result<u8, Failure> {
    let loaded = load(&args.graph)?;
    let lz = localization_number(&loaded.graph, &args.solver.options(&loaded.graph));
    let capture_time = lz.per_k.last().and_then(|r| r.outcome.rounds());
    let text = match args.output.format {
        Format::Json => to_json_line(&json!({
            "schema_version": SCHEMA_VERSION,
            "graph": loaded.name,
            "zeta": lz.zeta,
            "capture_time": capture_time,
            "per_k": lz.per_k.iter().map(|r| r.to_json(&loaded.name)).collect::<Vec<_>>(),
        })),
        Format::Csv => csv_of(
            &["schema_version", "graph", "k", "outcome", "capture_time", "states"],
            &lz.per_k
                .iter()
                .map(|r| {
                    vec![
                        SCHEMA_VERSION.to_string(),
                        loaded.name.clone(),
                        r.k.to_string(),
                        r.outcome.label().to_string(),
                        r.outcome.rounds().map_or(String::new(), |t| t.to_string()),
                        r.stats.states.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => match (lz.zeta, capture_time) {
            (Some(z), Some(t)) => format!("{}: localization number {z}, capture time {t}\n", loaded.name),
            _ => format!("{}: aborted after k = {}\n", loaded.name, lz.per_k.len()),
        },
    };
    emit(&args.output.out, &text)?;
    Ok(if lz.zeta.is_none() { EXIT_BUDGET } else { EXIT_OK })
}

fn cmd_mdim(args: &MdimArgs) -> Result<u8, Failure> {
    let loaded = load(&args.graph)?;
    let Some(md) = metric_dimension(&loaded.graph, args.max_subsets) else {
        eprintln!("metric dimension search exceeded {} subsets", args.max_subsets);
        return Ok(EXIT_BUDGET);
    };
    let witness = md.witness.vertices().to_vec();
    let text = match args.output.format {
        Format::Json => to_json_line(&json!({
            "schema_version": SCHEMA_VERSION,
            "graph": loaded.name,
            "beta": md.beta,
            "witness": witness,
            "subsets_checked": md.subsets_checked,
        })),
        Format::Csv => csv_of(
            &["schema_version", "graph", "beta", "witness"],
            &[vec![
                SCHEMA_VERSION.to_string(),
                loaded.name.clone(),
                md.beta.to_string(),
                witness.iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
            ]],
        ),
        Format::Text => format!("{}: metric dimension {}, resolving set {witness:?}\n", loaded.name, md.beta),
    };
    emit(&args.output.out, &text)?;
    Ok(EXIT_OK)
}

fn cmd_eval(args: &EvalArgs) -> Result<u8, Failure> {
    let loaded = load(&args.graph)?;
    let spec = parse_strategy(&args.strategy).map_err(usage)?;
    let opts = SolveOptions { threads: args.threads, ..SolveOptions::fast_for(&loaded.graph) };
    let strategy = spec.build(&loaded.graph, &opts).map_err(usage)?;
    let report = evaluate_strategy(&loaded.graph, strategy.as_ref(), args.max_rounds)
        .map_err(|e| Failure { code: EXIT_VERIFY_FAILED, message: e.to_string() })?;
    let text = match args.output.format {
        Format::Json => to_json_line(&json!({
            "schema_version": SCHEMA_VERSION,
            "graph": loaded.name,
            "report": report,
        })),
        Format::Csv => csv_of(
            &["schema_version", "round", "candidates", "probe", "distances", "class", "captured"],
            &report
                .transcript
                .iter()
                .map(|r| {
                    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
                    vec![
                        SCHEMA_VERSION.to_string(),
                        r.round.to_string(),
                        join(&r.candidates),
                        join(&r.probe),
                        r.distances.iter().map(u32::to_string).collect::<Vec<_>>().join(" "),
                        join(&r.class),
                        r.captured.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = match report.worst_case.rounds() {
                Some(t) => format!("{} with {} cops: worst case {t} rounds\n", report.strategy, report.cops),
                None => format!("{} with {} cops: robber survives {} rounds\n", report.strategy, report.cops, args.max_rounds),
            };
            for r in &report.transcript {
                let _ = writeln!(s, "  round {}: probe {:?} -> {:?}, candidates {:?}", r.round, r.probe, r.distances, r.class);
            }
            s
        }
    };
    emit(&args.output.out, &text)?;
    Ok(EXIT_OK)
}

fn cmd_decompose(args: &DecomposeArgs) -> Result<u8, Failure> {
    let loaded = load(&args.graph)?;
    let td: TreeDecomposition = match args.method {
        Method::Minfill => minfill_td(&loaded.graph),
        Method::Interval => match &loaded.family {
            Some(Family::IntervalGraph(iv)) => interval_clique_path(iv).map_err(usage)?.1,
            _ => return Err(usage("--method interval needs --family interval")),
        },
    };
    validate_td(&loaded.graph, &td).map_err(|e| Failure { code: EXIT_VERIFY_FAILED, message: e.to_string() })?;
    let stats = td_stats(&td);
    let text = match args.output.format {
        Format::Json => to_json_line(&serde_json::to_value(&td).expect("json")),
        Format::Csv => csv_of(
            &["schema_version", "bag", "vertices"],
            &td.bags
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    let vs = b.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
                    vec![SCHEMA_VERSION.to_string(), i.to_string(), vs]
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => format!(
            "{}: {} bags, width {}, radius {}, center bag {}, {} leaves\n",
            loaded.name,
            td.bags.len(),
            stats.width,
            stats.radius,
            stats.center,
            stats.leaves
        ),
    };
    emit(&args.output.out, &text)?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, Failure> {
    let cfg = VerifyConfig {
        budget: Budget { max_states: args.budget_states, ..Budget::default() },
        threads: args.threads,
    };
    let checks = run_suite(&args.suite, args.only.as_deref(), &cfg).map_err(usage)?;
    let text = match args.format {
        Format::Csv => to_csv(&checks),
        Format::Json => to_json_line(&json!({ "schema_version": SCHEMA_VERSION, "checks": checks })),
        Format::Text => {
            let mut s = String::new();
            for c in &checks {
                let status = if c.pass { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "{status} {:<32} expected {} observed {}", c.id, c.expected, c.observed);
            }
            s
        }
    };
    emit(&args.out, &text)?;
    Ok(if checks.iter().all(|c| c.pass) { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

pub fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Locnum(a) => cmd_locnum(a),
        Command::Mdim(a) => cmd_mdim(a),
        Command::Eval(a) => cmd_eval(a),
        Command::Decompose(a) => cmd_decompose(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

/// Parses `args` and runs the command, printing errors to standard error.
pub fn main_with<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
