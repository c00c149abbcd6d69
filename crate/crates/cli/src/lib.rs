//! Command-line front end for `loctower`: tower verification, word
//! normalization, tree queries, randomized suites and group search.
//!
//! Exit codes: 0 when every check passes, 1 when a check or suite fails,
//! 2 on usage, parse or build errors.

pub mod commands;
pub mod cycles;
pub mod display;
pub mod dot;
pub mod error;
pub mod files;
pub mod report;
pub mod words;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use loctower::suites::{DEFAULT_SAMPLES, DEFAULT_SEED};

use commands::{Level, TreeQuery};
use error::CliResult;
use report::{emit, Format, RunReport};

#[derive(Parser, Debug)]
#[command(
    name = "loctower",
    version,
    about = "Amalgam towers over a finite group"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct TargetArgs {
    /// Tower configuration; the bundled M11 tower when omitted.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Amalgam level of the tower.
    #[arg(long, value_enum, default_value = "K", global = true)]
    pub level: Level,
    /// Use a toy amalgam instead of the tower.
    #[arg(long, global = true)]
    pub toy: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check P1-P8 and the tower construction for a configuration.
    Verify {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Record wall-clock timings (the report is then not reproducible).
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Print the reduced form of a word.
    Normalize {
        expr: String,
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Run randomized and exhaustive suites; `all` or no names runs every suite.
    LemmaSuite {
        names: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        config: Option<PathBuf>,
        /// Toy amalgam for the tree and conjugacy suites.
        #[arg(long, default_value = "s3-d4")]
        toy: String,
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Tabulate property outcomes for every group file in a directory (CSV).
    Search {
        dir: PathBuf,
        /// Only this prime.
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Queries on the Bass-Serre tree.
    Tree {
        #[command(subcommand)]
        query: TreeCommand,
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand, Debug)]
pub enum TreeCommand {
    /// Vertices within a radius of a vertex, or of the base edge.
    Ball {
        #[arg(long)]
        radius: usize,
        /// Representative of the centre vertex.
        #[arg(long)]
        centre: Option<String>,
        #[arg(long, default_value_t = 2)]
        side: u8,
    },
    /// Distance and path between two vertices.
    Dist {
        #[arg(long)]
        from: String,
        #[arg(long, default_value_t = 2)]
        side1: u8,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 2)]
        side2: u8,
    },
    /// Axis of a hyperbolic element, or the fixed points of an elliptic one.
    Axis {
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 2)]
        window: usize,
    },
    /// Geodesic from the base vertex G2 to its image.
    Geodesic {
        #[arg(long)]
        word: String,
    },
}

impl TreeCommand {
    fn query(&self) -> TreeQuery {
        match self {
            TreeCommand::Ball {
                radius,
                centre,
                side,
            } => TreeQuery::Ball {
                radius: *radius,
                centre: centre.clone().map(|c| (c, *side)),
            },
            TreeCommand::Dist {
                from,
                side1,
                to,
                side2,
            } => TreeQuery::Dist {
                from: (from.clone(), *side1),
                to: (to.clone(), *side2),
            },
            TreeCommand::Axis { word, window } => TreeQuery::Axis {
                word: word.clone(),
                window: *window,
            },
            TreeCommand::Geodesic { word } => TreeQuery::Geodesic { word: word.clone() },
        }
    }
}

fn report(rep: &RunReport, output: &Output) -> CliResult<u8> {
    emit(&rep.render(output.format)?, output.out.as_deref())?;
    Ok(if rep.passed { 0 } else { 1 })
}

fn target(t: &TargetArgs) -> CliResult<commands::Target> {
    commands::target(t.toy.as_deref(), t.level, t.config.as_deref())
}

fn dispatch(cli: &Cli) -> CliResult<u8> {
    match &cli.command {
        Command::Verify {
            config,
            timings,
            output,
        } => report(&commands::verify(config.as_deref(), *timings)?, output),
        Command::Normalize {
            expr,
            target: t,
            output,
        } => {
            let s = commands::normalize(&target(t)?, expr, output.format)?;
            emit(&s, output.out.as_deref())?;
            Ok(0)
        }
        Command::LemmaSuite {
            names,
            samples,
            seed,
            config,
            toy,
            timings,
            output,
        } => report(
            &commands::lemma_suite(names, *samples, *seed, config.as_deref(), toy, *timings)?,
            output,
        ),
        Command::Search { dir, p, out } => {
            let csv = commands::search(dir, *p, &mut |msg| eprintln!("skipped: {}", msg))?;
            emit(&csv, out.as_deref())?;
            Ok(0)
        }
        Command::Tree {
            query,
            target: t,
            output,
        } => {
            let s = commands::tree(&target(t)?, &query.query(), output.format)?;
            emit(&s, output.out.as_deref())?;
            Ok(0)
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            2
        }
    }
}
