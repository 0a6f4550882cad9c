use std::path::PathBuf;
use std::process::ExitCode;

use atlas_cli::commands::{self, CliError};
use atlas_cli::{render_table, Annotations, ElementDataset, Format, RenderSpec};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "atlas",
    version,
    about = "Navigate the (n, l, j, m) periodic table"
)]
struct Cli {
    /// Element dataset (`z,symbol,name` lines); the bundled 2004 snapshot when omitted.
    #[arg(long, global = true)]
    dataset: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render rows 1..=N of the table.
    Table {
        #[arg(long, default_value_t = 4)]
        rows: u32,
        #[arg(long, default_value = "ascii")]
        format: Format,
        /// Comma-separated subset of families,series,status.
        #[arg(long, default_value = "")]
        annotate: Annotations,
    },
    /// Report on the element with atomic number Z.
    Element {
        z: u64,
        #[arg(long)]
        core: bool,
    },
    /// Report on the house (n, l, j, m), with j and m given doubled.
    #[command(allow_negative_numbers = true)]
    Address {
        n: u32,
        l: u32,
        two_j: u32,
        two_m: i32,
        #[arg(long)]
        core: bool,
    },
    /// List the first members of a family (name, or l,2j,2m).
    #[command(allow_negative_numbers = true)]
    Family {
        family: String,
        #[arg(long, default_value_t = 7)]
        count: usize,
    },
    /// Replay ladder moves (+m -m j +l -l +n -n @n,l,2j,2m) from a start (Z or n,l,2j,2m).
    Walk {
        #[arg(allow_hyphen_values = true)]
        start: String,
        #[arg(allow_hyphen_values = true, num_args = 0..)]
        moves: Vec<String>,
    },
    /// Check the closed-form Z against the enumeration oracle.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_sum: u32,
    },
    /// Madelung ground-state configuration.
    Config {
        z: u64,
        /// Abbreviate with a noble-gas core.
        #[arg(long)]
        core: bool,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let ds = match &cli.dataset {
        Some(path) => ElementDataset::load(path)?,
        None => ElementDataset::bundled(),
    };
    match cli.command {
        Command::Table {
            rows,
            format,
            annotate,
        } => {
            let spec = RenderSpec::new(rows, format, annotate).map_err(CliError::Usage)?;
            Ok(render_table(&spec, &ds))
        }
        Command::Element { z, core } => commands::element_report(z, core, &ds),
        Command::Address {
            n,
            l,
            two_j,
            two_m,
            core,
        } => commands::address_report(n, l, two_j, two_m, core, &ds),
        Command::Family { family, count } => commands::family_report(&family, count, &ds),
        Command::Walk { start, moves } => commands::walk_report(&start, &moves, &ds),
        Command::Verify { max_sum } => commands::verify_report(max_sum),
        Command::Config { z, core } => commands::config_report(z, core, &ds),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(CliError::Walk { transcript, error }) => {
            print!("{transcript}");
            println!("{error}");
            eprintln!("error: {}", error.name());
            ExitCode::FAILURE
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
