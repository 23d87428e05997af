//! Command-line front-end.
//!
//! Exit codes: `0` success or true predicate, `1` false predicate, `2` usage
//! or file error, `3` domain error. Results go to stdout, diagnostics to
//! stderr.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use molperc_core::automata::catalog::Machine;
use molperc_core::automata::{
    determinize, distinguishing_word, enzyme_perception, fallback_violations,
    find_relabeling_isomorphism, is_perception_based_reaction, minimize, simulation_embedding_with,
    MembershipMode,
};
use molperc_core::lgraph::GraphError;
use molperc_core::perception::{
    compile_environment, perception_selector, Enablement, EnablerSet, Environment, Perceiver,
    PerceptionError,
};
use molperc_core::rs::{ReactionSystem, RsError};
use molperc_core::{Automaton, AutomatonError, LabelledGraph, Symbol};

use crate::dot::{automaton_dot, graph_dot};
use crate::format::{graphs_to_json, FileFormat, FormatError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Rs(#[from] RsError),
    #[error(transparent)]
    Perception(#[from] PerceptionError),
    #[error("cannot write output: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Format(_) | CliError::Io(_) => 2,
            _ => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "molperc",
    version,
    about = "Perception-based reaction automata and graph-based reaction systems"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run, transform and compare automata.
    #[command(subcommand)]
    Automaton(AutomatonCmd),
    /// Evaluate graph-based reaction systems.
    #[command(subcommand)]
    Rs(RsCmd),
    /// Perception selectors, perception-enabled reactions and inhibition.
    #[command(subcommand)]
    Perception(PerceptionCmd),
    /// Built-in enzyme machines.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Export automata and graphs.
    #[command(subcommand)]
    Export(ExportCmd),
}

/// Automaton sources. Catalog sources are taken before file sources.
#[derive(Debug, Args)]
pub struct Sources {
    /// Built-in machine (GENERIC, PERCEPTION, PFK).
    #[arg(long = "catalog", value_name = "NAME")]
    catalog: Vec<String>,
    /// Automaton JSON file.
    #[arg(long = "file", value_name = "PATH")]
    file: Vec<PathBuf>,
}

impl Sources {
    fn load(&self, wanted: usize) -> Result<Vec<Automaton>, CliError> {
        let given = self.catalog.len() + self.file.len();
        if given != wanted {
            return Err(CliError::Usage(format!(
                "expected {wanted} automaton source(s) via --catalog/--file, got {given}"
            )));
        }
        let mut out = Vec::with_capacity(wanted);
        for name in &self.catalog {
            let m: Machine = name
                .parse()
                .map_err(|e: AutomatonError| CliError::Usage(e.to_string()))?;
            out.push(m.build());
        }
        for path in &self.file {
            out.push(Automaton::load(path)?);
        }
        Ok(out)
    }

    fn one(&self) -> Result<Automaton, CliError> {
        Ok(self.load(1)?.remove(0))
    }

    fn is_empty(&self) -> bool {
        self.catalog.is_empty() && self.file.is_empty()
    }
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
pub enum Mode {
    #[default]
    Embedding,
    Isomorphism,
}

#[derive(Debug, Subcommand)]
pub enum AutomatonCmd {
    /// Feed a comma-separated word; prints `accepted` or `rejected`.
    Run {
        #[command(flatten)]
        src: Sources,
        /// Comma-separated symbols, e.g. `s,p`; empty for the empty word.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Subset construction.
    Determinize {
        #[command(flatten)]
        src: Sources,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Minimal DFA (determinizes first when needed).
    Minimize {
        #[command(flatten)]
        src: Sources,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Language equivalence of two automata; prints a shortest witness otherwise.
    Equiv {
        #[command(flatten)]
        src: Sources,
    },
    /// Injective simulation embedding of the first automaton into the second.
    Embed {
        #[command(flatten)]
        src: Sources,
        /// Pin a symbol image, e.g. `F6P=s`; repeatable.
        #[arg(long = "map", value_name = "FROM=TO")]
        map: Vec<String>,
    },
    /// Whether the automaton is a perception-based reaction.
    Check {
        #[command(flatten)]
        src: Sources,
        #[arg(long, value_enum, default_value_t)]
        mode: Mode,
        /// Pin a symbol image onto the perception machine (embedding mode).
        #[arg(long = "map", value_name = "FROM=TO")]
        map: Vec<String>,
    },
    /// Enzyme perception of a stable state on a symbol.
    Perceive {
        #[command(flatten)]
        src: Sources,
        #[arg(long)]
        state: String,
        #[arg(long)]
        symbol: String,
    },
}

#[derive(Debug, Args)]
pub struct SystemState {
    /// Reaction system JSON file.
    #[arg(long, value_name = "PATH")]
    system: PathBuf,
    /// State graph JSON file (a subgraph of the background).
    #[arg(long, value_name = "PATH")]
    state: PathBuf,
}

impl SystemState {
    fn load(&self) -> Result<(ReactionSystem, LabelledGraph), CliError> {
        Ok((
            ReactionSystem::load(&self.system)?,
            LabelledGraph::load(&self.state)?,
        ))
    }
}

#[derive(Debug, Subcommand)]
pub enum RsCmd {
    /// Enablement of each reaction (or of `--reaction`).
    Enabled {
        #[command(flatten)]
        io: SystemState,
        #[arg(long)]
        reaction: Option<String>,
    },
    /// One application of the result function.
    Step {
        #[command(flatten)]
        io: SystemState,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Iterated dynamics; state i+1 is the result of state i united with context i.
    Run {
        #[command(flatten)]
        io: SystemState,
        #[arg(long)]
        steps: usize,
        /// Context graph for the next step; repeat for later steps.
        #[arg(long = "context", value_name = "PATH")]
        contexts: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

#[derive(Debug, Subcommand)]
pub enum PerceptionCmd {
    /// Perception selector of an enabler over a graph.
    Selector {
        #[arg(long, value_name = "PATH")]
        graph: PathBuf,
        /// Comma-separated enabler symbols.
        #[arg(long, allow_hyphen_values = true)]
        enabler: String,
    },
    /// Perception enablement of each reaction (or of `--reaction`).
    Enabled {
        #[command(flatten)]
        io: SystemState,
        #[arg(long, allow_hyphen_values = true)]
        enabler: String,
        #[arg(long)]
        reaction: Option<String>,
        /// Require only the reactants, not the products, in the state.
        #[arg(long)]
        relaxed: bool,
    },
    /// Whether a configuration inhibits the automaton in its environment.
    Inhibited {
        #[command(flatten)]
        src: Sources,
        #[arg(long, value_name = "PATH")]
        env: PathBuf,
        #[arg(long, value_name = "PATH")]
        state: PathBuf,
    },
    /// Compile an environment into a reaction system.
    Compile {
        #[command(flatten)]
        src: Sources,
        #[arg(long, value_name = "PATH")]
        env: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCmd {
    List,
    Show {
        name: String,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExportCmd {
    /// DOT for one automaton, graph, or system background.
    Dot {
        #[command(flatten)]
        src: Sources,
        #[arg(long, value_name = "PATH")]
        graph: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        system: Option<PathBuf>,
    },
}

fn parse_symbols(list: &str) -> Result<Vec<Symbol>, CliError> {
    if list.is_empty() {
        return Ok(Vec::new());
    }
    list.split(',')
        .map(|s| Symbol::new(s.trim()).map_err(|e| CliError::Usage(e.to_string())))
        .collect()
}

fn parse_map(pairs: &[String]) -> Result<BTreeMap<Symbol, Symbol>, CliError> {
    pairs
        .iter()
        .map(|pair| {
            let (from, to) = pair
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("expected FROM=TO, got {pair:?}")))?;
            let sym = |s: &str| Symbol::new(s.trim()).map_err(|e| CliError::Usage(e.to_string()));
            Ok((sym(from)?, sym(to)?))
        })
        .collect()
}

fn emit_automaton(out: &mut dyn Write, a: &Automaton, format: OutputFormat) -> io::Result<()> {
    match format {
        OutputFormat::Json => out.write_all(a.to_json().as_bytes()),
        OutputFormat::Dot => out.write_all(automaton_dot(a).as_bytes()),
    }
}

fn emit_graph(out: &mut dyn Write, g: &LabelledGraph, format: OutputFormat) -> io::Result<()> {
    match format {
        OutputFormat::Json => out.write_all(g.to_json().as_bytes()),
        OutputFormat::Dot => out.write_all(graph_dot(g).as_bytes()),
    }
}

fn word_text(w: &[Symbol]) -> String {
    if w.is_empty() {
        molperc_core::EPSILON.to_owned()
    } else {
        w.iter().map(Symbol::as_str).collect::<Vec<_>>().join(",")
    }
}

/// Reports per-reaction verdicts; the predicate is "the named reaction holds"
/// or, without a name, "some reaction holds".
fn report_reactions(
    out: &mut dyn Write,
    sys: &ReactionSystem,
    only: Option<&str>,
    yes: &str,
    no: &str,
    mut holds: impl FnMut(&molperc_core::rs::Reaction) -> Result<bool, CliError>,
) -> Result<bool, CliError> {
    if let Some(name) = only {
        if sys.reaction(name).is_none() {
            return Err(CliError::Usage(format!("no reaction named {name:?}")));
        }
    }
    let mut any = false;
    for b in sys
        .reactions()
        .iter()
        .filter(|b| only.is_none_or(|n| n == b.name))
    {
        let h = holds(b)?;
        any |= h;
        writeln!(out, "{}: {}", b.name, if h { yes } else { no })?;
    }
    Ok(any)
}

/// Executes one command. `Ok(false)` means a false predicate.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool, CliError> {
    match cli.command {
        Command::Automaton(cmd) => automaton(cmd, out, err),
        Command::Rs(cmd) => rs(cmd, out),
        Command::Perception(cmd) => perception(cmd, out, err),
        Command::Catalog(CatalogCmd::List) => {
            for m in Machine::ALL {
                let a = m.build();
                writeln!(
                    out,
                    "{}\t{} states\t{} transitions",
                    m,
                    a.states().len(),
                    a.transition_count()
                )?;
            }
            Ok(true)
        }
        Command::Catalog(CatalogCmd::Show { name, format }) => {
            let m: Machine = name
                .parse()
                .map_err(|e: AutomatonError| CliError::Usage(e.to_string()))?;
            emit_automaton(out, &m.build(), format)?;
            Ok(true)
        }
        Command::Export(ExportCmd::Dot { src, graph, system }) => {
            let chosen = usize::from(!src.is_empty())
                + usize::from(graph.is_some())
                + usize::from(system.is_some());
            if chosen != 1 {
                return Err(CliError::Usage(
                    "give exactly one of --catalog/--file, --graph, --system".into(),
                ));
            }
            if let Some(path) = graph {
                emit_graph(out, &LabelledGraph::load(&path)?, OutputFormat::Dot)?;
            } else if let Some(path) = system {
                emit_graph(
                    out,
                    ReactionSystem::load(&path)?.background(),
                    OutputFormat::Dot,
                )?;
            } else {
                emit_automaton(out, &src.one()?, OutputFormat::Dot)?;
            }
            Ok(true)
        }
    }
}

fn automaton(
    cmd: AutomatonCmd,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<bool, CliError> {
    match cmd {
        AutomatonCmd::Run { src, word } => {
            let a = src.one()?;
            let word = parse_symbols(&word)?;
            let accepted = a.accepts(&word)?;
            writeln!(out, "{}", if accepted { "accepted" } else { "rejected" })?;
            Ok(accepted)
        }
        AutomatonCmd::Determinize { src, format } => {
            emit_automaton(out, &determinize(&src.one()?), format)?;
            Ok(true)
        }
        AutomatonCmd::Minimize { src, format } => {
            let a = src.one()?;
            let d = if a.is_deterministic() {
                a
            } else {
                determinize(&a)
            };
            emit_automaton(out, &minimize(&d)?, format)?;
            Ok(true)
        }
        AutomatonCmd::Equiv { src } => {
            let [a, b]: [Automaton; 2] = src.load(2)?.try_into().expect("two sources");
            match distinguishing_word(&a, &b)? {
                None => {
                    writeln!(out, "equivalent")?;
                    Ok(true)
                }
                Some(w) => {
                    writeln!(out, "{}", word_text(&w))?;
                    Ok(false)
                }
            }
        }
        AutomatonCmd::Embed { src, map } => {
            let [a, b]: [Automaton; 2] = src.load(2)?.try_into().expect("two sources");
            match simulation_embedding_with(&a, &b, &parse_map(&map)?) {
                Some(e) => {
                    let v = serde_json::json!({
                        "states": e.states,
                        "symbols": e.symbols.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect::<BTreeMap<_, _>>(),
                    });
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&v).expect("maps serialize")
                    )?;
                    Ok(true)
                }
                None => {
                    writeln!(out, "no embedding")?;
                    Ok(false)
                }
            }
        }
        AutomatonCmd::Check { src, mode, map } => {
            let a = src.one()?;
            let map = parse_map(&map)?;
            let member = match mode {
                Mode::Embedding if map.is_empty() => {
                    is_perception_based_reaction(&a, MembershipMode::Embedding)
                }
                Mode::Embedding => {
                    simulation_embedding_with(&a, &Machine::Perception.build(), &map).is_some()
                }
                Mode::Isomorphism => {
                    find_relabeling_isomorphism(&a, &Machine::Perception.build()).is_some()
                }
            };
            if a.has_partition() {
                for v in fallback_violations(&a) {
                    writeln!(
                        err,
                        "warning: perceiving state {} cannot fall back to {} after {}",
                        v.perceiving, v.stable, v.symbol
                    )?;
                }
            }
            writeln!(
                out,
                "{}",
                if member {
                    "perception-based"
                } else {
                    "not perception-based"
                }
            )?;
            Ok(member)
        }
        AutomatonCmd::Perceive { src, state, symbol } => {
            let a = src.one()?;
            match enzyme_perception(&a, &state, &symbol) {
                Ok(q) => {
                    writeln!(out, "{q}")?;
                    Ok(true)
                }
                Err(AutomatonError::PerceptionUndefined { .. }) => {
                    writeln!(out, "undefined")?;
                    Ok(false)
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

fn rs(cmd: RsCmd, out: &mut dyn Write) -> Result<bool, CliError> {
    match cmd {
        RsCmd::Enabled { io, reaction } => {
            let (sys, t) = io.load()?;
            sys.check_state(&t)?;
            report_reactions(out, &sys, reaction.as_deref(), "enabled", "disabled", |b| {
                Ok(sys.enabled(b, &t)?)
            })
        }
        RsCmd::Step { io, format } => {
            let (sys, t) = io.load()?;
            emit_graph(out, &sys.result_set(&t)?, format)?;
            Ok(true)
        }
        RsCmd::Run {
            io,
            steps,
            contexts,
            format,
        } => {
            let (sys, t) = io.load()?;
            let contexts = contexts
                .iter()
                .map(|p| LabelledGraph::load(p))
                .collect::<Result<Vec<_>, _>>()?;
            let trace = sys.run(&t, steps, &contexts)?;
            match format {
                OutputFormat::Json => out.write_all(graphs_to_json(&trace).as_bytes())?,
                OutputFormat::Dot => {
                    for g in &trace {
                        emit_graph(out, g, OutputFormat::Dot)?;
                    }
                }
            }
            Ok(true)
        }
    }
}

fn load_environment(path: &Path) -> Result<Environment, CliError> {
    Ok(Environment::load(path)?)
}

fn perception(
    cmd: PerceptionCmd,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<bool, CliError> {
    match cmd {
        PerceptionCmd::Selector { graph, enabler } => {
            let g = LabelledGraph::load(&graph)?;
            let enabler: EnablerSet = parse_symbols(&enabler)?.into_iter().collect();
            out.write_all(perception_selector(&g, &enabler)?.to_json().as_bytes())?;
            Ok(true)
        }
        PerceptionCmd::Enabled {
            io,
            enabler,
            reaction,
            relaxed,
        } => {
            let (sys, t) = io.load()?;
            let enabler: EnablerSet = parse_symbols(&enabler)?.into_iter().collect();
            let mode = if relaxed {
                Enablement::Relaxed
            } else {
                Enablement::Strict
            };
            let perceiver = Perceiver::new(&sys, &enabler)?.mode(mode);
            sys.check_state(&t)?;
            report_reactions(
                out,
                &sys,
                reaction.as_deref(),
                "perception-enabled",
                "disabled",
                |b| Ok(perceiver.perception_enabled(b, &t)?),
            )
        }
        PerceptionCmd::Inhibited { src, env, state } => {
            let a = src.one()?;
            let env = load_environment(&env)?;
            let t = LabelledGraph::load(&state)?;
            let compiled = compile_environment(&a, &env)?;
            let inhibited = compiled.is_inhibited(&t)?;
            writeln!(
                out,
                "{}",
                if inhibited {
                    "inhibited"
                } else {
                    "not inhibited"
                }
            )?;
            Ok(inhibited)
        }
        PerceptionCmd::Compile { src, env, format } => {
            let a = src.one()?;
            let env = load_environment(&env)?;
            let compiled = compile_environment(&a, &env)?;
            for w in &compiled.warnings {
                writeln!(err, "warning: {w}")?;
            }
            match format {
                OutputFormat::Json => out.write_all(compiled.system.to_json().as_bytes())?,
                OutputFormat::Dot => {
                    emit_graph(out, compiled.system.background(), OutputFormat::Dot)?;
                }
            }
            Ok(true)
        }
    }
}

/// Parses `std::env::args`, runs the command and maps the outcome to an exit
/// code.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let stderr = io::stderr();
    match run(cli, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = writeln!(stderr.lock(), "error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
