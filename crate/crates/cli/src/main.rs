use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopf_factor::bundle::CheckSelection;

mod commands;
mod report;

#[derive(Parser)]
#[command(name = "hopf-factor", version, about = "Exact checks for quasitriangular Hopf and comodule algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct Input {
    /// Bundle file (JSON).
    #[arg(conflicts_with = "example", required_unless_present = "example")]
    pub path: Option<PathBuf>,
    /// Named example instead of a file, e.g. `double:S3` (see `list`).
    #[arg(long)]
    pub example: Option<String>,
    /// Field for `--example`: `q` or `gf:<p>`.
    #[arg(long, requires = "example")]
    pub field: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Hopf,
    Comodule,
    Weak,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Double,
    Reflective,
    Group,
    Dual,
    Sweedler,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the axioms of a bundle. Exit 1 if any check fails.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        hopf: bool,
        #[arg(long)]
        rmatrix: bool,
        #[arg(long)]
        comodule: bool,
        #[arg(long)]
        kmatrix: bool,
        /// Every section; the default when no section flag is given.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
    },
    /// Rank of the Drinfeld map, of θ_B, or of Ω.
    Factorizable {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        level: Level,
        #[arg(long)]
        json: bool,
    },
    /// Build an example bundle and write it as JSON.
    Construct {
        #[arg(long, value_enum)]
        kind: Kind,
        /// `C<n>` or `S<n>`.
        #[arg(long)]
        group: Option<String>,
        /// Parameter of the Sweedler R-matrix.
        #[arg(long, default_value = "0")]
        lambda: String,
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decide whether the comodule algebra has no nontrivial costable ideal.
    Simple {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// List the named examples.
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { input, hopf, rmatrix, comodule, kmatrix, all, json } => {
            let sel = CheckSelection { hopf, rmatrix, comodule, kmatrix };
            commands::check(&input, if all { CheckSelection::all() } else { sel }, json)
        }
        Command::Factorizable { input, level, json } => commands::factorizable(&input, level, json),
        Command::Construct { kind, group, lambda, field, out } => commands::construct(kind, group.as_deref(), &lambda, &field, &out),
        Command::Simple { input, json } => commands::simple(&input, json),
        Command::List => commands::list(),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
