//! `domfree` command-line front end.
//!
//! Every command prints one JSON report to standard output (or `--output`).
//! Exit status is 0 on success, 1 when `verify` finds a failing criterion or
//! a bound fails on a graph that is verified free, and 2 on input errors.

mod commands;
mod input;

use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::Outcome;

#[derive(Parser, Debug)]
#[command(name = "domfree", version, about = "Domination in graphs with forbidden induced subgraphs")]
struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    /// Inline graph: a graph6 string or a family shorthand such as `kstar:3`.
    #[arg(long, short = 'g', conflicts_with = "input")]
    pub graph: Option<String>,

    /// Read the graph from a file (`-` for standard input).
    #[arg(long, short = 'i')]
    pub input: Option<PathBuf>,

    /// Format of `--input`.
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: InputFormat,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct FamilyParams {
    #[arg(long)]
    pub k: Option<NonZeroUsize>,
    #[arg(long)]
    pub l: Option<NonZeroUsize>,
    #[arg(long)]
    pub m: Option<NonZeroUsize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact domination number with a minimum dominating set.
    Gamma {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Test for induced copies of K*_k, S*_l and P_m (any subset of them).
    Free {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        params: FamilyParams,
        /// Additional forbidden graphs (graph6 or family shorthand).
        #[arg(long = "forbid")]
        forbid: Vec<String>,
    },
    /// Layer-by-layer dominating set with an optional bound report.
    Dominate {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        params: FamilyParams,
        /// BFS root; defaults to a center vertex.
        #[arg(long)]
        root: Option<usize>,
        /// Also compute the exact domination number.
        #[arg(long)]
        gamma: bool,
    },
    /// Forbidden-subgraph witnesses for layers whose bounds fail.
    Witness {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        k: NonZeroUsize,
        #[arg(long)]
        l: NonZeroUsize,
        #[arg(long)]
        root: Option<usize>,
        /// Only this layer (at least 2); all layers by default.
        #[arg(long)]
        layer: Option<usize>,
    },
    /// Whether every graph of the right set induced-contains one of the left set.
    Leq {
        #[arg(long, required = true, num_args = 1..)]
        left: Vec<String>,
        /// Defaults to [K*_k, S*_l, P_m] when k, l and m are given.
        #[arg(long, num_args = 1..)]
        right: Vec<String>,
        #[command(flatten)]
        params: FamilyParams,
    },
    /// Values of g, f and the total bound.
    Bounds {
        #[arg(long)]
        k: NonZeroUsize,
        #[arg(long)]
        l: NonZeroUsize,
        #[arg(long)]
        m: NonZeroUsize,
        /// Use the binomial Ramsey bound everywhere instead of known values.
        #[arg(long)]
        binomial: bool,
    },
    /// Generate a graph family member, or all connected graphs of an order.
    Gen {
        /// path, cycle, complete, empty, star, kstar, sstar or connected
        #[arg(long)]
        family: String,
        #[arg(long)]
        size: usize,
        /// Include an edge list alongside graph6.
        #[arg(long, value_enum, default_value = "graph6")]
        format: InputFormat,
    },
    /// Run acceptance suites over the fixture and sampled corpora.
    Verify {
        /// Suite names; all suites when omitted.
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random graphs per sampled family.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// graph6 corpus of connected graphs; the built-in one by default.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = commands::run(cli.command);
    let (report, code) = match outcome {
        Ok(Outcome { report, violation }) => (Some(report), if violation { 1 } else { 0 }),
        Err(e) => {
            eprintln!("error: {e}");
            (None, 2)
        }
    };
    if let Some(report) = report {
        let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
        text.push('\n');
        let written = match &cli.output {
            Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        };
        if let Err(e) = written {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code)
}
