use std::io::{stderr, stdout};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fuzzy_sns::cli::{self, CarryFamily, OutputFormat, Overrides};
use fuzzy_sns::RemainderMode;

#[derive(Parser)]
#[command(name = "fuzzy-sns", version, about = "Carry operators over crisp and fuzzy cardinals")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file and print the transformation trace.
    Eval {
        scenario: PathBuf,
        /// text, json or csv.
        #[arg(long, default_value = "text")]
        format: OutputFormat,
        /// correlated or extension; overrides the scenario's option.
        #[arg(long)]
        remainder_mode: Option<RemainderMode>,
        /// Clamp negative remainder values to zero.
        #[arg(long)]
        clamp_negative: bool,
    },
    /// Form the common carry of partial carries given as literals.
    Carry {
        /// tri or dfn.
        #[arg(long, default_value = "tri")]
        family: CarryFamily,
        #[arg(required = true, allow_hyphen_values = true)]
        partials: Vec<String>,
    },
    /// Print the membership function of a triangular literal as CSV.
    Table {
        #[arg(allow_hyphen_values = true)]
        literal: String,
        #[arg(long, default_value_t = 11)]
        resolution: usize,
    },
    /// Run the randomized oracle-equivalence suite.
    OracleCheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: u64,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let (mut out, mut err) = (stdout().lock(), stderr().lock());
    let code = match args.command {
        Command::Eval { scenario, format, remainder_mode, clamp_negative } => {
            let overrides = Overrides { remainder_mode, clamp_negative };
            cli::cmd_eval(&scenario, format, overrides, &mut out, &mut err)
        }
        Command::Carry { family, partials } => cli::cmd_carry(family, &partials, &mut out, &mut err),
        Command::Table { literal, resolution } => cli::cmd_table(&literal, resolution, &mut out, &mut err),
        Command::OracleCheck { seed, cases } => cli::cmd_oracle_check(seed, cases, &mut out, &mut err),
    };
    ExitCode::from(code as u8)
}
