mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use commands::CliError;

/// Tutte-like polynomials of rooted trees and V-posets.
///
/// Inputs are files, or `-` for standard input. Trees use the parenthesis
/// encoding, e.g. `((()())(()))`. Posets list the element count on the first
/// line and one relation `u v` (meaning u < v, 1-indexed) per line after it.
#[derive(Debug, Parser)]
#[command(name = "vposet", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the polynomial of a rooted tree.
    TreePoly {
        file: PathBuf,
        /// Compute through deletion-contraction instead of the recursion.
        #[arg(long)]
        dc: bool,
        /// Also evaluate at the integer point (X, Y).
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_negative_numbers = true)]
        eval: Option<Vec<BigInt>>,
        #[arg(long)]
        json: bool,
    },
    /// Print the polynomial of a V-poset.
    PosetPoly {
        file: PathBuf,
        /// Sum over maximal antichains instead of the recursion.
        #[arg(long)]
        expansion: bool,
        /// Also evaluate at the integer point (X, Y).
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_negative_numbers = true)]
        eval: Option<Vec<BigInt>>,
        #[arg(long)]
        json: bool,
    },
    /// Decide V-poset membership and print a certificate.
    Check { file: PathBuf },
    /// Tabulate the six special values, checked against direct counts.
    Counts { file: PathBuf },
    /// Tabulate V-poset counts by size.
    Census {
        #[arg(long = "max", value_name = "N")]
        max: usize,
    },
    /// Print the growth constants of the V-poset counts as JSON.
    Asymptotics {
        /// Truncation order of the series.
        #[arg(long, default_value_t = 100)]
        order: usize,
    },
    /// Search small rooted trees for polynomial collisions.
    Collide {
        #[arg(long = "max", value_name = "N")]
        max: usize,
    },
}

fn point(eval: Option<Vec<BigInt>>) -> Option<(BigInt, BigInt)> {
    eval.map(|v| {
        let [x, y]: [BigInt; 2] = v.try_into().expect("clap enforces two values");
        (x, y)
    })
}

fn run(cli: Cli) -> Result<commands::Outcome, CliError> {
    match cli.command {
        Command::TreePoly { file, dc, eval, json } => {
            commands::tree_poly(&file, dc, point(eval), json)
        }
        Command::PosetPoly {
            file,
            expansion,
            eval,
            json,
        } => commands::poset_poly(&file, expansion, point(eval), json),
        Command::Check { file } => commands::check(&file),
        Command::Counts { file } => commands::counts(&file),
        Command::Census { max } => commands::census(max),
        Command::Asymptotics { order } => commands::asymptotics(order),
        Command::Collide { max } => commands::collide(max),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.status())
        }
    }
}
