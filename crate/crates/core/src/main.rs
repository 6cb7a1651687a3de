use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use orbcoh::cli::{self, Command, OutputFormat, RunConfig, EXIT_IO};

#[derive(Parser)]
#[command(
    name = "orbcoh",
    version,
    about = "Exact Chen-Ruan cohomology of almost contact orbifolds"
)]
struct Args {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Twisted sectors and 3-multisectors
    Sectors(Common),
    /// Graded orbifold cohomology and Poincaré polynomial
    Cohomology(Common),
    /// Cup-product structure constants and missing Euler integrals
    Ring(Common),
    /// Structural checks
    Verify(Common),
}

#[derive(clap::Args)]
struct Common {
    /// Input document (.toml or .json)
    input: PathBuf,
    /// Euler oracle document merged with any inline entries
    #[arg(long)]
    oracle: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include passing detail rows
    #[arg(short, long)]
    verbose: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let (command, common) = match args.command {
        Cmd::Sectors(c) => (Command::Sectors, c),
        Cmd::Cohomology(c) => (Command::Cohomology, c),
        Cmd::Ring(c) => (Command::Ring, c),
        Cmd::Verify(c) => (Command::Verify, c),
    };
    let config = RunConfig {
        command,
        input: common.input,
        oracle: common.oracle,
        format: match common.format {
            Format::Table => OutputFormat::Table,
            Format::Json => OutputFormat::Json,
        },
        verbose: common.verbose,
    };
    let outcome = match cli::run(&config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(cli::exit_code_for(&e) as u8);
        }
    };
    match &common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.output) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(EXIT_IO as u8);
            }
        }
        None => print!("{}", outcome.output),
    }
    ExitCode::from(outcome.exit_code as u8)
}
