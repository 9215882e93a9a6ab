use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use aoe_simplify::bench::{format_table, run_bench, BenchConfig};
use aoe_simplify::io::{
    emit_aoe, emit_aon, emit_dot, emit_timeline, parse_aoe, parse_aon, parse_durations,
    parse_timeline,
};
use aoe_simplify::oracle::random_poset;
use aoe_simplify::{
    equivalent, expand_aon, schedule, simplify, AoeError, AoeGraph, Engine, FormatError,
};
use clap::{Parser, Subcommand, ValueEnum};

/// Build and simplify activity-on-edge project graphs.
#[derive(Parser)]
#[command(name = "aoe", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a dependency list into its canonical AOE graph.
    Expand {
        aon: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Simplify an AOE graph, or the expansion of a dependency list.
    Simplify {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = EngineArg::Optimized)]
        engine: EngineArg,
        /// Write the applied rules as JSON to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exit 0 if the two AOE graphs are equivalent, 1 otherwise.
    Check { first: PathBuf, second: PathBuf },
    /// Expand a dependency list and simplify it.
    Minimize {
        aon: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Earliest times, makespan and critical tasks.
    Levels {
        aoe: PathBuf,
        #[arg(long)]
        durations: PathBuf,
    },
    /// Graphviz source, optionally leveled by a timeline from `levels`.
    Dot {
        aoe: PathBuf,
        #[arg(long)]
        levels: Option<PathBuf>,
    },
    /// Random dependency list.
    Gen {
        #[arg(long)]
        tasks: usize,
        #[arg(long)]
        density: f64,
        #[arg(long)]
        seed: u64,
    },
    /// Time both engines on random inputs of growing size.
    Bench {
        #[arg(long, default_value_t = 400)]
        max_tasks: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Naive,
    Optimized,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Naive => Engine::Naive,
            EngineArg::Optimized => Engine::Optimized,
        }
    }
}

enum Failure {
    /// Bad invocation or unreadable input.
    Usage(String),
    /// Valid input, negative answer or impossible request.
    Semantic(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<AoeError> for Failure {
    fn from(e: AoeError) -> Self {
        Failure::Semantic(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Semantic(format!("stdout: {e}"))),
    }
}

fn with_path(path: &Path, e: FormatError) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}

fn load_aoe(path: &Path) -> Result<AoeGraph, Failure> {
    parse_aoe(&read(path)?).map_err(|e| with_path(path, e))
}

/// Accepts either document kind; dependency lists are expanded.
fn load_any(path: &Path) -> Result<AoeGraph, Failure> {
    let text = read(path)?;
    let is_aon = serde_json::from_str::<serde_json::Value>(&text)
        .map(|v| v.get("tasks").is_some())
        .unwrap_or(false);
    if is_aon {
        let aon = parse_aon(&text).map_err(|e| with_path(path, e))?;
        Ok(expand_aon(&aon)?)
    } else {
        parse_aoe(&text).map_err(|e| with_path(path, e))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Expand { aon, output } => {
            let a = parse_aon(&read(&aon)?).map_err(|e| with_path(&aon, e))?;
            write(output.as_deref(), &emit_aoe(&expand_aon(&a)?))
        }
        Command::Simplify {
            input,
            engine,
            trace,
            output,
        } => {
            let out = simplify(&load_any(&input)?, engine.into())?;
            if let Some(path) = trace {
                let json = serde_json::to_string_pretty(&out.trace).expect("rule steps serialize");
                write(Some(&path), &(json + "\n"))?;
            }
            write(output.as_deref(), &emit_aoe(&out.graph))
        }
        Command::Check { first, second } => {
            if equivalent(&load_aoe(&first)?, &load_aoe(&second)?)? {
                println!("equivalent");
                Ok(())
            } else {
                Err(Failure::Semantic("not equivalent".into()))
            }
        }
        Command::Minimize { aon, output } => {
            let a = parse_aon(&read(&aon)?).map_err(|e| with_path(&aon, e))?;
            let out = simplify(&expand_aon(&a)?, Engine::Optimized)?;
            write(output.as_deref(), &emit_aoe(&out.graph))
        }
        Command::Levels { aoe, durations } => {
            let g = load_aoe(&aoe)?;
            let d = parse_durations(&read(&durations)?).map_err(|e| with_path(&durations, e))?;
            write(None, &emit_timeline(&schedule(&g, &d)?))
        }
        Command::Dot { aoe, levels } => {
            let g = load_aoe(&aoe)?;
            let timeline = match levels {
                Some(p) => Some(parse_timeline(&read(&p)?).map_err(|e| with_path(&p, e))?),
                None => None,
            };
            write(None, &emit_dot(&g, timeline.as_ref())?)
        }
        Command::Gen {
            tasks,
            density,
            seed,
        } => {
            if !(0.0..=1.0).contains(&density) {
                return Err(Failure::Usage(format!(
                    "density {density} is not in [0, 1]"
                )));
            }
            write(
                None,
                &emit_aon(&random_poset(tasks, density, seed).to_aon()),
            )
        }
        Command::Bench { max_tasks, seed } => {
            let rows = run_bench(&BenchConfig::up_to(max_tasks, seed))?;
            write(None, &format_table(&rows))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Semantic(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
