//! `ordram`: construct, verify, solve, bound and analyze ordered Ramsey
//! instances.
//!
//! Exit codes: 0 success or avoiding, 1 verified violation, 2 usage or parse
//! error, 3 I/O error.

mod commands;
mod ledger;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "ordram",
    version,
    about = "Ordered Ramsey numbers: constructions, verification, exact search and bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write an explicit avoiding coloring as `.oc`.
    Construct {
        /// monotone-cycle, alt-parity, star, path-grid, star-blowup, pentagon or matching
        name: String,
        params: Vec<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check that a coloring avoids every demand.
    Verify {
        coloring: PathBuf,
        /// `<pattern>:<color>`, e.g. `mon-cycle:4:1` or `file:p.og:2`
        #[arg(long = "avoid", required = true)]
        avoid: Vec<String>,
    },
    /// Compute the ordered Ramsey number of a demand list.
    Solve {
        #[arg(long = "avoid", required = true)]
        avoid: Vec<String>,
        /// Largest N to try.
        #[arg(long)]
        max_n: Option<usize>,
        /// First N to try.
        #[arg(long)]
        start: Option<usize>,
        #[arg(long)]
        budget_seconds: Option<f64>,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        /// Ledger directory; defaults to $ORDRAM_LEDGER, then `.ordram`.
        #[arg(long)]
        ledger: Option<PathBuf>,
        /// Recompute even if the ledger has an exact value.
        #[arg(long)]
        force: bool,
    },
    /// Evaluate a closed-form value or bound.
    Bound {
        /// Run `ordram bound list` for the families.
        family: String,
        params: Vec<String>,
    },
    /// Structural report for a pattern spec or `.og` file.
    Analyze { graph: String },
    /// Ledger maintenance.
    Ledger {
        #[command(subcommand)]
        action: LedgerAction,
    },
}

#[derive(Subcommand, Debug)]
enum LedgerAction {
    /// Re-verify every witness and compare values with the oracles.
    Check {
        #[arg(long)]
        ledger: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineArg {
    Auto,
    Clauses,
    Branch,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct { name, params, out } => commands::construct(&name, &params, &out),
        Command::Verify { coloring, avoid } => commands::verify(&coloring, &avoid),
        Command::Solve {
            avoid,
            max_n,
            start,
            budget_seconds,
            budget_nodes,
            threads,
            engine,
            ledger,
            force,
        } => commands::solve(commands::SolveArgs {
            avoid,
            max_n,
            start,
            budget_seconds,
            budget_nodes,
            threads,
            engine: match engine {
                EngineArg::Auto => ordram::solver::Engine::Auto,
                EngineArg::Clauses => ordram::solver::Engine::Clauses,
                EngineArg::Branch => ordram::solver::Engine::Branch,
            },
            ledger: ledger::ledger_dir(ledger),
            force,
        }),
        Command::Bound { family, params } => commands::bound(&family, &params),
        Command::Analyze { graph } => commands::analyze(&graph),
        Command::Ledger {
            action: LedgerAction::Check { ledger },
        } => commands::ledger_check(&ledger::ledger_dir(ledger)),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                ordram::Error::Io(_) => 3,
                _ => 2,
            })
        }
    }
}
