use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use multiarr::exec::Execution;
use multiarr_cli::commands::{self, Input, Mode, Report};
use multiarr_cli::corpus;

/// Exit status for usage, input and library errors. Verdicts use 0, 1, 2.
const ERROR_EXIT: u8 = 3;

#[derive(Parser)]
#[command(name = "multiarr", version, about = "Betti numbers, restrictions and freeness of hyperplane multiarrangements")]
struct Cli {
    /// Print the machine-readable report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Run the per-flat computations on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summary, b2 table and freeness verdict. Exit status 0 free, 1 not free, 2 undecided.
    Analyze { file: PathBuf },
    /// Second Betti number with its local contributions.
    B2 {
        file: PathBuf,
        /// Also report b2^H and b2 away from this hyperplane (form or index).
        #[arg(long)]
        hyperplane: Option<String>,
    },
    /// Restriction onto a hyperplane.
    Restrict {
        file: PathBuf,
        #[arg(long)]
        hyperplane: String,
        #[arg(long, value_enum, default_value = "ziegler")]
        mode: Mode,
    },
    /// The four-term inequality chain at a hyperplane.
    Chain {
        file: PathBuf,
        #[arg(long)]
        hyperplane: String,
    },
    /// Maximal flags with their restriction values.
    Flags {
        file: PathBuf,
        #[arg(long)]
        heavy_only: bool,
    },
    /// Search for a supersolvable filtration of the underlying arrangement.
    Supersolvable { file: PathBuf },
    /// Saito's criterion for a list of derivations.
    Saito {
        file: PathBuf,
        /// JSON list of coordinate lists, one per derivation.
        #[arg(long)]
        derivations: PathBuf,
    },
    /// Characteristic polynomial of a simple arrangement.
    Chi { file: PathBuf },
    /// Print a bundled example file, or list them all.
    Examples {
        name: Option<String>,
        /// Write every bundled example as <name>.json into this directory.
        #[arg(long)]
        output_dir: Option<PathBuf>,
    },
}

fn emit<R: Report>(report: &R, json: bool) -> Result<i32> {
    if json {
        println!("{}", serde_json::to_string_pretty(report)?);
    } else {
        print!("{}", report.render());
    }
    Ok(report.exit_code())
}

fn examples(name: Option<String>, output_dir: Option<PathBuf>, json: bool) -> Result<i32> {
    if let Some(dir) = output_dir {
        std::fs::create_dir_all(&dir)?;
        for n in corpus::names() {
            let text = serde_json::to_string_pretty(&corpus::load(n)?)?;
            std::fs::write(dir.join(format!("{n}.json")), text + "\n")?;
        }
        return Ok(0);
    }
    match name {
        Some(n) => println!("{}", serde_json::to_string_pretty(&corpus::load(&n)?)?),
        None if json => println!("{}", serde_json::to_string_pretty(&commands::listing())?),
        None => {
            for e in commands::listing() {
                println!("{:<18} {}", e.name, e.summary);
                println!("{:<18} {}", "", e.defining_polynomial);
            }
        }
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<i32> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let json = cli.json;
    match cli.command {
        Command::Analyze { file } => emit(&commands::analyze(&Input::read(&file)?, exec)?, json),
        Command::B2 { file, hyperplane } => {
            emit(&commands::betti(&Input::read(&file)?, hyperplane.as_deref(), exec)?, json)
        }
        Command::Restrict { file, hyperplane, mode } => {
            emit(&commands::restrict(&Input::read(&file)?, &hyperplane, mode)?, json)
        }
        Command::Chain { file, hyperplane } => emit(&commands::chain(&Input::read(&file)?, &hyperplane)?, json),
        Command::Flags { file, heavy_only } => emit(&commands::flags(&Input::read(&file)?, heavy_only)?, json),
        Command::Supersolvable { file } => emit(&commands::supersolvable(&Input::read(&file)?)?, json),
        Command::Saito { file, derivations } => {
            emit(&commands::saito(&Input::read(&file)?, &derivations)?, json)
        }
        Command::Chi { file } => emit(&commands::chi(&Input::read(&file)?)?, json),
        Command::Examples { name, output_dir } => examples(name, output_dir, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(ERROR_EXIT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(ERROR_EXIT)
        }
    }
}
