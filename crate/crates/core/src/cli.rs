//! The `capcol` command line.
//!
//! Exit codes: 0 success, 2 violation or counterexample, 3 budget exceeded,
//! 64 usage error, 65 unreadable or malformed input, 70 internal error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::capital::{self, colouring_to_json, validate_capital, ListAssignment};
use crate::corpus;
use crate::discharging::{self, DischargeError};
use crate::exact::{self, ExactError, ProbeOutcome, SolveBudget};
use crate::generators::{self, GenerateError};
use crate::plane_graph::io::ParseError;
use crate::plane_graph::PlaneGraph;
use crate::rbb::{self, ConditionSet, Rbb, RbbError, RbbRequest};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_INTERNAL: i32 = 70;

pub const DEFAULT_SEED: u64 = 20_240_229;

#[derive(Parser, Debug)]
#[command(name = "capcol", version, about = "Capital colourings of plane graphs")]
struct Cli {
    /// Print a JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, value_name = "N", default_value_t = 10_000_000)]
    budget_nodes: u64,
    #[arg(long, global = true, value_name = "S", default_value_t = 60.0)]
    budget_seconds: f64,
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a colouring for properness and unique face maxima.
    Validate { graph: PathBuf, colouring: PathBuf },
    /// Capital colouring with at most five colours.
    Colour5 { graph: PathBuf },
    /// Exact capital chromatic number.
    Chi { graph: PathBuf },
    /// Capital colouring from lists, given in a file or drawn at random.
    ListSolve {
        graph: PathBuf,
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        lists: Option<PathBuf>,
        /// Draw random lists of this size.
        #[arg(long, value_name = "K")]
        random: Option<u32>,
        #[arg(long, value_name = "M", requires = "random", default_value_t = 10)]
        universe: u32,
        #[arg(long, value_name = "T", requires = "random", default_value_t = 1)]
        trials: u32,
    },
    /// Try every assignment of k-subsets of 1..=m.
    Choosable {
        graph: PathBuf,
        #[arg(short)]
        k: u32,
        #[arg(short)]
        m: u32,
    },
    /// Charges, rule transfers and reducible configurations.
    Discharge { graph: PathBuf },
    /// Red/blue/black colouring rooted at the outer edge xy.
    Rbb {
        graph: PathBuf,
        #[arg(short)]
        x: usize,
        #[arg(short)]
        y: usize,
        #[arg(short)]
        c: RbbArg,
        #[arg(long, value_enum, default_value_t = ConditionsArg::Strong7)]
        conditions: ConditionsArg,
        /// Use the constraint search instead of the recursive construction.
        #[arg(long)]
        oracle: bool,
    },
    /// Write a generated graph file to stdout.
    Gen { family: String, params: Vec<u64> },
    /// List the built-in corpus with a 5-colouring check per entry.
    Corpus,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum RbbArg {
    Red,
    Blue,
    Black,
}

impl From<RbbArg> for Rbb {
    fn from(a: RbbArg) -> Rbb {
        match a {
            RbbArg::Red => Rbb::Red,
            RbbArg::Blue => Rbb::Blue,
            RbbArg::Black => Rbb::Black,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum ConditionsArg {
    Fg6,
    Strong7,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn fail(code: i32, message: impl std::fmt::Display) -> CommandOutput {
        CommandOutput { code, stdout: String::new(), stderr: format!("capcol: {message}\n") }
    }
}

struct Ctx {
    json: bool,
    budget: SolveBudget,
    seed: u64,
}

impl Ctx {
    /// JSON report or text, whichever was asked for.
    fn emit<T: Serialize>(&self, code: i32, report: &T, text: String) -> CommandOutput {
        let stdout = if self.json {
            let mut s = serde_json::to_string(report).expect("reports serialize");
            s.push('\n');
            s
        } else {
            text
        };
        CommandOutput { code, stdout, stderr: String::new() }
    }

    fn budget_exceeded(&self, e: &ExactError) -> CommandOutput {
        let nodes = match e {
            ExactError::BudgetExceeded { nodes } => *nodes,
            _ => 0,
        };
        self.emit(EXIT_BUDGET, &json!({ "status": "budget_exceeded", "nodes": nodes }), format!("inconclusive: {e}\n"))
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_command<I, T>(args: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                CommandOutput { code, stdout: text, stderr: String::new() }
            } else {
                CommandOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    if !(cli.budget_seconds > 0.0 && cli.budget_seconds.is_finite()) || cli.budget_nodes == 0 {
        return CommandOutput::fail(EXIT_USAGE, "budgets must be positive");
    }
    let ctx = Ctx {
        json: cli.json,
        budget: SolveBudget {
            node_limit: cli.budget_nodes,
            time_limit: Duration::from_secs_f64(cli.budget_seconds),
        },
        seed: cli.seed,
    };
    match dispatch(&ctx, cli.command) {
        Ok(out) | Err(out) => out,
    }
}

type Outcome = Result<CommandOutput, CommandOutput>;

fn read(path: &Path) -> Result<String, CommandOutput> {
    std::fs::read_to_string(path).map_err(|e| CommandOutput::fail(EXIT_DATA, format!("{}: {e}", path.display())))
}

fn parse_err(path: &Path, e: ParseError) -> CommandOutput {
    CommandOutput::fail(EXIT_DATA, format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<PlaneGraph, CommandOutput> {
    PlaneGraph::from_json(&read(path)?).map_err(|e| parse_err(path, e))
}

fn nonempty(g: &PlaneGraph) -> Result<(), CommandOutput> {
    if g.vertex_count() == 0 {
        return Err(CommandOutput::fail(EXIT_USAGE, "graph has no vertices"));
    }
    Ok(())
}

fn colour_list(col: &[u32]) -> String {
    col.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn raw_json(s: &str) -> serde_json::Value {
    serde_json::from_str(s).expect("own output is valid JSON")
}

fn dispatch(ctx: &Ctx, command: Command) -> Outcome {
    match command {
        Command::Validate { graph, colouring } => validate(ctx, &graph, &colouring),
        Command::Colour5 { graph } => colour5(ctx, &graph),
        Command::Chi { graph } => chi(ctx, &graph),
        Command::ListSolve { graph, lists, random, universe, trials } => match (lists, random) {
            (Some(lists), _) => list_solve_file(ctx, &graph, &lists),
            (None, Some(k)) => list_solve_random(ctx, &graph, k, universe, trials),
            (None, None) => Err(CommandOutput::fail(EXIT_USAGE, "give a lists file or --random K")),
        },
        Command::Choosable { graph, k, m } => choosable(ctx, &graph, k, m),
        Command::Discharge { graph } => discharge(ctx, &graph),
        Command::Rbb { graph, x, y, c, conditions, oracle } => {
            let conditions = match conditions {
                ConditionsArg::Fg6 => ConditionSet::Fg6,
                ConditionsArg::Strong7 => ConditionSet::Strong7,
            };
            rbb_cmd(ctx, &graph, RbbRequest { x, y, c: c.into(), conditions }, oracle)
        }
        Command::Gen { family, params } => gen(&family, &params),
        Command::Corpus => corpus_cmd(ctx),
    }
}

fn validate(ctx: &Ctx, graph: &Path, colouring: &Path) -> Outcome {
    let g = load_graph(graph)?;
    let col = capital::colouring_from_json(&read(colouring)?, g.vertex_count()).map_err(|e| parse_err(colouring, e))?;
    let report = validate_capital(&g, &col);
    let valid = report.is_valid();
    let mut text = String::new();
    if valid {
        text.push_str("valid capital colouring\n");
    }
    for v in &report.uncoloured {
        let _ = writeln!(text, "uncoloured vertex {v}");
    }
    for (u, v) in &report.monochromatic_edges {
        let _ = writeln!(text, "edge {u}-{v} has both ends coloured {}", col[*u]);
    }
    for f in &report.faces {
        let _ = writeln!(text, "face {:?}: colour {} held by {:?}", f.vertices, f.max, f.holders);
    }
    let code = if valid { EXIT_OK } else { EXIT_VIOLATION };
    Ok(ctx.emit(code, &json!({ "valid": valid, "report": report }), text))
}

fn colour5(ctx: &Ctx, graph: &Path) -> Outcome {
    let g = load_graph(graph)?;
    nonempty(&g)?;
    let col = capital::colour5(&g).map_err(|e| CommandOutput::fail(EXIT_INTERNAL, e))?;
    if !validate_capital(&g, &col).is_valid() {
        return Err(CommandOutput::fail(EXIT_INTERNAL, "constructed colouring failed validation"));
    }
    let max = col.iter().copied().max().unwrap_or(0);
    let report = json!({ "colouring": raw_json(&colouring_to_json(&col)), "max_colour": max });
    Ok(ctx.emit(EXIT_OK, &report, format!("{}\nmax colour {max}\n", colour_list(&col))))
}

fn chi(ctx: &Ctx, graph: &Path) -> Outcome {
    let g = load_graph(graph)?;
    nonempty(&g)?;
    match exact::chi_capital_with_colouring(&g, ctx.budget) {
        Ok((k, col)) => {
            let report = json!({ "chi": k, "colouring": raw_json(&colouring_to_json(&col)) });
            Ok(ctx.emit(EXIT_OK, &report, format!("chi = {k}\n{}\n", colour_list(&col))))
        }
        Err(e @ ExactError::BudgetExceeded { .. }) => Ok(ctx.budget_exceeded(&e)),
        Err(e) => Err(CommandOutput::fail(EXIT_USAGE, e)),
    }
}

fn list_solve_file(ctx: &Ctx, graph: &Path, lists: &Path) -> Outcome {
    let g = load_graph(graph)?;
    let lists_val = ListAssignment::from_json(&read(lists)?, g.vertex_count()).map_err(|e| parse_err(lists, e))?;
    match exact::capital_list_colouring(&g, &lists_val, ctx.budget) {
        Ok(Some(col)) => {
            let report = json!({ "status": "coloured", "colouring": raw_json(&colouring_to_json(&col)) });
            Ok(ctx.emit(EXIT_OK, &report, format!("{}\n", colour_list(&col))))
        }
        Ok(None) => Ok(ctx.emit(EXIT_VIOLATION, &json!({ "status": "absent" }), "no capital colouring from these lists\n".into())),
        Err(e @ ExactError::BudgetExceeded { .. }) => Ok(ctx.budget_exceeded(&e)),
        Err(e) => Err(CommandOutput::fail(EXIT_USAGE, e)),
    }
}

fn list_solve_random(ctx: &Ctx, graph: &Path, k: u32, m: u32, trials: u32) -> Outcome {
    let g = load_graph(graph)?;
    let mut failures = Vec::new();
    for t in 0..trials {
        let seed = ctx.seed.wrapping_add(t as u64);
        let lists = exact::random_lists(g.vertex_count(), k, m, seed).map_err(|e| CommandOutput::fail(EXIT_USAGE, e))?;
        match exact::capital_list_colouring(&g, &lists, ctx.budget) {
            Ok(Some(_)) => {}
            Ok(None) => failures.push((t, raw_json(&lists.to_json()))),
            Err(e @ ExactError::BudgetExceeded { .. }) => return Ok(ctx.budget_exceeded(&e)),
            Err(e) => return Err(CommandOutput::fail(EXIT_USAGE, e)),
        }
    }
    let mut text = format!("seed {}: {} of {trials} random {k}-list assignments from 1..={m} coloured\n", ctx.seed, trials as usize - failures.len());
    for (t, lists) in &failures {
        let _ = writeln!(text, "trial {t} has no colouring: {lists}");
    }
    let report = json!({
        "seed": ctx.seed,
        "k": k,
        "universe": m,
        "trials": trials,
        "failures": failures.iter().map(|(t, l)| json!({ "trial": t, "lists": l })).collect::<Vec<_>>(),
    });
    let code = if failures.is_empty() { EXIT_OK } else { EXIT_VIOLATION };
    Ok(ctx.emit(code, &report, text))
}

fn choosable(ctx: &Ctx, graph: &Path, k: u32, m: u32) -> Outcome {
    let g = load_graph(graph)?;
    match exact::probe_choosability(&g, k, m, ctx.budget) {
        Ok(outcome) => {
            let (code, text) = match &outcome {
                ProbeOutcome::AllSatisfied { assignments } => {
                    (EXIT_OK, format!("every {k}-list assignment from 1..={m} is colourable ({assignments} checked)\n"))
                }
                ProbeOutcome::Counterexample { lists } => (EXIT_VIOLATION, format!("no capital colouring from lists {lists:?}\n")),
            };
            Ok(ctx.emit(code, &outcome, text))
        }
        Err(e @ ExactError::BudgetExceeded { .. }) => Ok(ctx.budget_exceeded(&e)),
        Err(e) => Err(CommandOutput::fail(EXIT_USAGE, e)),
    }
}

fn discharge(ctx: &Ctx, graph: &Path) -> Outcome {
    let g = load_graph(graph)?;
    let report = match discharging::audit(&g) {
        Ok(r) => r,
        Err(e @ DischargeError::Disconnected) => return Err(CommandOutput::fail(EXIT_VIOLATION, e)),
    };
    let mut text = format!(
        "initial total {} (sixths: {}), final total {}, conserved: {}\n",
        report.initial_total, report.initial_total.0, report.final_total, report.conserved
    );
    let _ = writeln!(text, "{} transfers, {} configuration hits", report.transfers.len(), report.hits.len());
    for h in &report.hits {
        let roles: Vec<String> = h.witnesses.iter().map(|w| format!("{}={:?}", w.role, w.element)).collect();
        let _ = writeln!(text, "  {:?} {}", h.kind, roles.join(" "));
    }
    if !report.silent_vertices.is_empty() {
        let _ = writeln!(text, "vertices no rule applies to: {:?}", report.silent_vertices);
    }
    if let Some(a) = &report.alarm {
        let _ = writeln!(text, "ALARM: {a}");
    }
    let code = if report.ok() { EXIT_OK } else { EXIT_VIOLATION };
    Ok(ctx.emit(code, &report, text))
}

fn rbb_cmd(ctx: &Ctx, graph: &Path, req: RbbRequest, oracle: bool) -> Outcome {
    let g = load_graph(graph)?;
    if req.x >= g.vertex_count() || req.y >= g.vertex_count() {
        return Err(CommandOutput::fail(EXIT_USAGE, "x and y must be vertices of the graph"));
    }
    let result = if oracle { rbb::oracle_rbb(&g, &req) } else { rbb::lemma3_rbb(&g, &req) };
    match result {
        Ok(col) => {
            let violations = rbb::check_conditions(&g, &col, &req);
            let code = if violations.is_empty() { EXIT_OK } else { EXIT_INTERNAL };
            let names: Vec<String> = col.iter().map(|c| c.to_string()).collect();
            let report = json!({ "colouring": col, "violations": violations });
            Ok(ctx.emit(code, &report, format!("{}\n", names.join(" "))))
        }
        Err(RbbError::NoColouring) => {
            Ok(ctx.emit(EXIT_VIOLATION, &json!({ "status": "absent" }), "no colouring satisfies the conditions\n".into()))
        }
        Err(e) => Err(CommandOutput::fail(EXIT_USAGE, e)),
    }
}

fn gen(family: &str, params: &[u64]) -> Outcome {
    match generators::generate(family, params) {
        Ok(g) => Ok(CommandOutput { code: EXIT_OK, stdout: format!("{}\n", g.to_json()), stderr: String::new() }),
        Err(e @ GenerateError::Graph(_)) => Err(CommandOutput::fail(EXIT_INTERNAL, e)),
        Err(e) => Err(CommandOutput::fail(EXIT_USAGE, e)),
    }
}

#[derive(Serialize)]
struct CorpusLine {
    name: String,
    vertices: usize,
    edges: usize,
    faces: usize,
    colour5_valid: bool,
}

fn corpus_cmd(ctx: &Ctx) -> Outcome {
    let mut lines = Vec::new();
    let mut text = String::new();
    for e in corpus::corpus() {
        let g = e.graph().map_err(|err| CommandOutput::fail(EXIT_INTERNAL, err))?;
        let ok = capital::colour5(&g).is_ok_and(|c| validate_capital(&g, &c).is_valid());
        let _ = writeln!(text, "{:<28} V={:<3} E={:<3} F={:<3} colour5 {}", e.name, g.vertex_count(), g.edge_count(), g.faces().len(), if ok { "ok" } else { "FAILED" });
        lines.push(CorpusLine { name: e.name, vertices: g.vertex_count(), edges: g.edge_count(), faces: g.faces().len(), colour5_valid: ok });
    }
    let code = if lines.iter().all(|l| l.colour5_valid) { EXIT_OK } else { EXIT_VIOLATION };
    Ok(ctx.emit(code, &lines, text))
}
