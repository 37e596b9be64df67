//! `spa`: structural parameters of circuit netlists.

mod commands;
mod config;
mod exec;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::config::{RunArgs, RunConfig};

#[derive(Parser)]
#[command(name = "spa", version)]
#[command(
    about = "Induced width, separator width, cycle-cutsets and space-time tradeoffs of circuit netlists"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print DAG node and moral-graph edge counts as JSON
    Parse {
        file: PathBuf,

        /// Also dump the moral graph as JSON to this file
        #[arg(long)]
        moral: Option<PathBuf>,

        /// Also dump the DAG as JSON to this file
        #[arg(long)]
        dag: Option<PathBuf>,
    },

    /// Ordering comparison, cutset, clustering and hybrid summary per circuit
    Analyze(RunArgs),

    /// Secondary-tree series from the primary tree down to one cluster
    Tradeoff(RunArgs),

    /// Clique, separator and cutset size histograms of the primary tree
    Histogram(RunArgs),

    /// Primary tree, or the secondary tree for `--sep-bound`
    Tree {
        #[command(flatten)]
        run: RunArgs,

        /// Render as Graphviz DOT instead of JSON
        #[arg(long)]
        dot: bool,
    },

    /// Run the structural invariant checks; exit 2 on a violation
    Verify(RunArgs),
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Parse { file, moral, dag } => {
            commands::parse(&file, moral.as_deref(), dag.as_deref())
        }
        Command::Analyze(args) => commands::analyze(&RunConfig::from_args(args)?),
        Command::Tradeoff(args) => commands::tradeoff(&RunConfig::from_args(args)?),
        Command::Histogram(args) => commands::histograms(&RunConfig::from_args(args)?),
        Command::Tree { run, dot } => commands::tree(&RunConfig::from_args(run)?, dot),
        Command::Verify(args) => commands::verify(&RunConfig::from_args(args)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
