//! `slopeforge`: JSON in, JSON (or SVG) out.
//!
//! Exit status 0 on success, 1 when a verification fails, 2 on bad input.

mod commands;
mod schema;
mod svg;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use slopeforge::suites::SuiteConfig;
use slopeforge::Limits;

use commands::Outcome;
use schema::{parse, InputError};

#[derive(Parser)]
#[command(name = "slopeforge", version, about = "Exact slope filtrations, ramification and tensor induction")]
struct Cli {
    /// JSON input file; standard input when omitted or "-".
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Seed for the corpora used by `verify`.
    #[arg(long, global = true, default_value_t = SuiteConfig::default().seed)]
    seed: u64,
    /// Largest group stored with a full multiplication table.
    #[arg(long, global = true)]
    max_order: Option<usize>,
    /// Worker threads for `verify`; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Newton polygon of a slope multiset.
    Np {
        /// Also render the polygon as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Slopes, Newton polygon and Swan conductor of a character.
    Swan,
    /// Herbrand function and upper breaks of a lower ramification chain.
    Herbrand,
    /// Induced character.
    Induce,
    /// Tensor-induced character.
    Tind,
    /// Mackey identity for a normal subgroup and two characters.
    Mackey,
    /// Order and class count of a wreath product with a cyclic top.
    Wreath,
    /// Goursat or wreath-image classification.
    Classify,
    /// Character table.
    Table {
        /// Append the gcd of the irreducible degrees.
        #[arg(long)]
        gcd: bool,
    },
    /// Reduction data of a rank-one differential operator.
    Robba,
    /// Weyl dimension of a highest weight.
    WeylDim {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
        /// "2rho", "0", or comma-separated coordinates.
        #[arg(long, default_value = "2rho")]
        weight: String,
    },
    /// Run an acceptance suite by name or id, or "all".
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

fn read_input(path: &Option<PathBuf>) -> Result<String, InputError> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| InputError(format!("cannot read {}: {e}", p.display())))?
        }
        _ => {
            std::io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

fn run(cli: &Cli) -> Result<Outcome, InputError> {
    let mut limits = Limits::default();
    if let Some(m) = cli.max_order {
        if m == 0 {
            return Err(InputError("--max-order must be positive".into()));
        }
        limits.max_group_order = m;
    }
    let input = || read_input(&cli.input);
    match &cli.command {
        Command::Np { svg } => {
            let (out, s) = commands::np(parse(&input()?)?)?;
            if let Some(path) = svg {
                std::fs::write(path, svg::render(&s.polygon()))
                    .map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(out)
        }
        Command::Swan => commands::swan_cmd(parse(&input()?)?, &limits),
        Command::Herbrand => commands::herbrand(parse(&input()?)?, &limits),
        Command::Induce => commands::induce_cmd(parse(&input()?)?, false, &limits),
        Command::Tind => commands::induce_cmd(parse(&input()?)?, true, &limits),
        Command::Mackey => commands::mackey(parse(&input()?)?, &limits),
        Command::Wreath => commands::wreath(parse(&input()?)?, &limits),
        Command::Classify => commands::classify(parse(&input()?)?, &limits),
        Command::Table { gcd } => commands::table(parse(&input()?)?, *gcd, &limits),
        Command::Robba => commands::robba(parse(&input()?)?),
        Command::WeylDim { family, rank, weight } => commands::weyl(family, *rank, weight),
        Command::Verify { suite } => {
            let config = SuiteConfig { seed: cli.seed, jobs: cli.jobs, limits };
            commands::verify(suite, &config)
        }
    }
}

fn write_output(path: &Option<PathBuf>, json: &serde_json::Value) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(json)?;
    text.push('\n');
    match path {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = write_output(&cli.output, &out.json) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
