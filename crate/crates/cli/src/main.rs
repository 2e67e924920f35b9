// SPDX-License-Identifier: Apache-2.0

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use boolnet_cli::{self as cli, Construction, Result};
use clap::{Args, Parser, Subcommand};

/// Build, analyze and verify Boolean networks and the covering arrays formed
/// by their fixed points.
#[derive(Parser)]
#[command(name = "boolnet", version)]
struct Cli {
    /// Maximum number of variables for truth tables and enumeration.
    #[arg(long, env = "BN_CAP", global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a network and write it as JSON.
    Construct(ConstructArgs),
    /// Report fixed points, independence number and per-node measures.
    Analyze {
        network: PathBuf,
        /// Write the fixed points, one row per line.
        #[arg(long)]
        fp_out: Option<PathBuf>,
        /// Write the interaction graph in DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Leave elapsed times out of the report.
        #[arg(long)]
        no_timing: bool,
    },
    /// Strength of a set of rows.
    Strength { rows: PathBuf },
    /// Screen a graph against necessary conditions for k-independence.
    Admissible {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Check a Steiner system: fano, sqs8, sts:<n>, or a file.
    VerifySteiner {
        system: String,
        /// Also check that the blocks have strength t.
        #[arg(long)]
        ca_check: bool,
    },
    /// Exact minimum covering array size for small parameters.
    CanSearch {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_rows: usize,
    },
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    kind: Kind,
    /// Output file; stdout when absent.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Skip checking the advertised properties.
    #[arg(long, global = true)]
    no_verify: bool,
}

#[derive(Subcommand)]
enum Kind {
    /// XOR of in-neighbours on a DOT graph.
    Linear {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Loopless K_n with fixed points of weight at most k+1 and fixed parity.
    Sk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// k copies of K_m sharing vertex 1.
    Windmill {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
    /// K_r and K_s joined by arcs from vertex 1 to all of K_s.
    CliqueGluing {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Linear K_{k+1} plus n-k-1 isolated loops.
    CliquePlusLoops {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Monotone network from a Steiner system.
    SteinerMonotone {
        #[arg(long)]
        system: String,
    },
    /// Append an isolated loop.
    AddLoop {
        #[arg(long)]
        input: PathBuf,
    },
    /// Multiplex two networks through a new last variable.
    PivotExtend {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        f_tilde: PathBuf,
        /// Use the fixed-point indicator of f as the pivot function.
        #[arg(long)]
        loopless: bool,
    },
    /// Block-diagonal product.
    Product {
        #[arg(long = "input", required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Strongly connected union through fixed-point gates.
    StrongUnion {
        #[arg(long = "input", required = true)]
        inputs: Vec<PathBuf>,
    },
}

fn load_all(paths: &[PathBuf]) -> Result<Vec<boolnet::BooleanNetwork>> {
    paths.iter().map(|p| cli::load_network(p)).collect()
}

fn construction(kind: &Kind) -> Result<Construction> {
    Ok(match kind {
        Kind::Linear { graph } => {
            let g = cli::load_graph(graph)?;
            for j in (0..g.n()).filter(|&j| g.in_degree(j) == 0) {
                eprintln!("warning: vertex {} has no inputs; its function is constant 0", j + 1);
            }
            Construction::Linear(g)
        }
        &Kind::Sk { n, k } => Construction::Sk { n, k },
        &Kind::Windmill { m, k } => Construction::Windmill { m, k },
        &Kind::CliqueGluing { r, s } => Construction::CliqueGluing { r, s },
        &Kind::CliquePlusLoops { n, k } => Construction::CliquePlusLoops { n, k },
        Kind::SteinerMonotone { system } => Construction::SteinerMonotone(cli::load_steiner(system)?),
        Kind::AddLoop { input } => Construction::AddLoop(cli::load_network(input)?),
        Kind::PivotExtend { f, f_tilde, loopless } => Construction::PivotExtend {
            f: cli::load_network(f)?,
            f_tilde: cli::load_network(f_tilde)?,
            loopless: *loopless,
        },
        Kind::Product { inputs } => Construction::Product(load_all(inputs)?),
        Kind::StrongUnion { inputs } => Construction::StrongUnion(load_all(inputs)?),
    })
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => cli::write_file(p, text),
        None => {
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    Err(cli::CliError::Io { path: "<stdout>".into(), source: e })
                }
                _ => Ok(()),
            }
        }
    }
}

fn run(args: Cli) -> Result<()> {
    if let Some(cap) = args.cap {
        boolnet::set_arity_cap(cap);
    }
    match args.command {
        Command::Construct(c) => {
            let f = cli::construct(&construction(&c.kind)?, !c.no_verify)?;
            emit(c.output.as_deref(), &f.to_json())
        }
        Command::Analyze { network, fp_out, dot, no_timing } => {
            let f = cli::load_network(&network)?;
            let a = cli::analyze(&f, !no_timing);
            if let Some(p) = fp_out {
                cli::write_file(&p, &a.fixed_points.to_text())?;
            }
            if let Some(p) = dot {
                cli::write_file(&p, &a.graph.to_dot())?;
            }
            emit(None, &cli::to_json(&a.report))
        }
        Command::Strength { rows } => {
            emit(None, &cli::to_json(&cli::strength(&cli::load_rows(&rows)?)))
        }
        Command::Admissible { graph, k } => {
            let g = cli::load_graph(&graph)?;
            emit(None, &cli::to_json(&cli::admissible(&g, k)?))
        }
        Command::VerifySteiner { system, ca_check } => {
            let s = cli::load_steiner(&system)?;
            let (report, outcome) = cli::verify_steiner(&s, ca_check);
            emit(None, &cli::to_json(&report))?;
            outcome
        }
        Command::CanSearch { n, k, max_rows } => {
            emit(None, &cli::to_json(&cli::can_search(n, k, max_rows)?))
        }
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
