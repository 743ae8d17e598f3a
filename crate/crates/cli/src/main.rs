//! Batch experiment runner over the library: restriction-bound checks,
//! ladder-property verification, lex-restriction identities, toric
//! presentation demos, and reduction searches, each emitting a
//! reproducible machine-readable report.

mod commands;
mod config;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Outcome;

#[derive(Parser, Debug)]
#[command(name = "greenlex", version, about, propagate_version = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the general-hyperplane restriction bound on random ideals
    GreenCheck(commands::GreenArgs),
    /// Verify the ladder property of a form sequence
    GrdVerify(commands::GrdArgs),
    /// Check the lex-segment restriction identity on random Hilbert functions
    LexRestrict(commands::LexArgs),
    /// Search for small reductions at the fiber-cone level
    EakinSathaye(commands::EakinArgs),
    /// Build a toric presentation and show its kernel
    ToricDemo(commands::ToricArgs),
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::GreenCheck(args) => commands::green_check(args),
        Command::GrdVerify(args) => commands::grd_verify(args),
        Command::LexRestrict(args) => commands::lex_restrict(args),
        Command::EakinSathaye(args) => commands::eakin_sathaye(args),
        Command::ToricDemo(args) => commands::toric_demo(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let Err(e) = report::emit(
                &outcome.report,
                outcome.common.format,
                outcome.common.out.as_deref(),
            ) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if outcome.failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
