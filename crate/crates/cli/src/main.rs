//! `toi`: generate product graphs, build and verify immersion certificates,
//! and compute `toi(G)` and `χ(G)` exactly on small graphs.
//!
//! Exit status: 0 success, 1 a well-formed negative answer (failed
//! verification, solver timeout, indeterminate conjecture check), 2 bad
//! usage or malformed input.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "toi",
    version,
    about = "Totally odd strong immersions in graph products"
)]
struct Cli {
    /// Print every report as one JSON object on standard output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a standard graph: complete, cycle, path or petersen.
    Gen {
        family: String,
        /// Order of the graph (ignored for petersen).
        n: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the product of two graph files.
    Product {
        /// cartesian, direct, lex or strong.
        #[arg(long)]
        op: String,
        g: PathBuf,
        h: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a certificate against a host graph.
    Verify {
        graph: PathBuf,
        cert: PathBuf,
        /// immersion, totally-odd or totally-odd-strong.
        #[arg(long, default_value = "totally-odd-strong")]
        require: String,
    },
    /// Run one of the product constructions.
    #[command(subcommand)]
    Construct(Construct),
    /// Compute toi(G) exactly.
    Solve {
        graph: PathBuf,
        #[arg(long)]
        max_t: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the witness certificate here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare χ(G) with toi(G).
    CheckConjecture {
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Wall-clock limit in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Search-tree node limit.
    #[arg(long)]
    nodes: Option<u64>,
    /// Longest route the solver enumerates.
    #[arg(long)]
    max_route_length: Option<usize>,
}

/// A factor graph with an optional certificate. Without one, the solver's
/// witness for the graph is used.
#[derive(Args, Clone)]
struct Factors {
    #[arg(long)]
    g: PathBuf,
    #[arg(long)]
    g_cert: Option<PathBuf>,
    #[arg(long)]
    h: PathBuf,
    #[arg(long)]
    h_cert: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct Output {
    /// Certificate file; printed to standard output when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Also write the host graph.
    #[arg(long)]
    emit_graph: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Construct {
    /// K_r in G × H from factor immersions and a base immersion in K_t × K_s.
    DirectLift {
        #[command(flatten)]
        factors: Factors,
        /// Base certificate in K_t × K_s; the solver's witness when absent.
        #[arg(long)]
        base: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// K_ts in K_2t × K_s.
    DirectKts {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        out: Output,
    },
    /// K_{t+s-1} in G □ H when the second factor immerses K_s, s >= 4.
    CartLarge {
        #[command(flatten)]
        factors: Factors,
        #[command(flatten)]
        out: Output,
    },
    /// K_4 in G □ H from K_3 immersions in both factors.
    #[command(name = "cart-33")]
    Cart33 {
        #[command(flatten)]
        factors: Factors,
        #[command(flatten)]
        out: Output,
    },
    /// K_4 in G □ H for non-bipartite G and H with a vertex of degree 2.
    #[command(name = "cart-32")]
    Cart32 {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = commands::configure_threads().and_then(|()| commands::run(&cli));
    match outcome {
        Ok(report) => {
            report.print(cli.json);
            ExitCode::from(report.code)
        }
        Err(failure) => {
            failure.print(cli.json);
            ExitCode::from(failure.code)
        }
    }
}
