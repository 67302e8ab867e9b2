mod commands;
mod eval;
mod output;
mod syntax;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tarski_core::axioms::DEFAULT_DEPTH_CAP;

use commands::{Axiom, Duality};
use output::{error_json, CliError, Report};
use syntax::ModelSpec;

/// Explore Boolean inverse monoids: Cuntz models C_n, symmetric inverse
/// monoids I_n and their products.
#[derive(Parser)]
#[command(name = "tarski", version)]
struct Cli {
    /// cuntzN, symN or prod:symA,symB
    #[arg(long, global = true, default_value = "cuntz2")]
    model: ModelSpec,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for inputs that are sampled when not given.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Refinement depth limit for witness searches.
    #[arg(long = "depth-cap", global = true, default_value_t = DEFAULT_DEPTH_CAP)]
    depth_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate `;`-separated expressions, e.g. `let t = {0->1, 1->0}; sigma(t)`.
    Eval {
        #[arg(required = true, allow_hyphen_values = true)]
        program: Vec<String>,
    },
    /// Produce and check a witness for f1, f2 or f3.
    Axioms {
        #[arg(value_enum)]
        axiom: Axiom,
        /// Nonzero idempotent; sampled from the seed on cuntz models if omitted.
        #[arg(long = "e")]
        e: Option<String>,
        /// Involution (f2 only).
        #[arg(long = "t")]
        t: Option<String>,
    },
    /// Write an element as a join of restrictions of units.
    Factorize {
        /// Nonzero element; sampled from the seed on cuntz models if omitted.
        #[arg(long = "s")]
        s: Option<String>,
    },
    /// List the structure space or the germ groupoid of a finite model.
    Duality {
        #[arg(value_enum)]
        what: Duality,
    },
    /// Extend a unit group automorphism to the whole monoid.
    Reconstruct {
        /// identity, inner:<cycles>, s6-outer or a JSON file of generator images.
        #[arg(long)]
        alpha: String,
    },
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Eval { program } => commands::eval(cli.model, &program.join(" ")),
        Command::Axioms { axiom, e, t } => {
            commands::axioms(cli.model, *axiom, e.as_deref(), t.as_deref(), cli.seed, cli.depth_cap)
        }
        Command::Factorize { s } => commands::factorize(cli.model, s.as_deref(), cli.seed),
        Command::Duality { what } => commands::duality(cli.model, *what),
        Command::Reconstruct { alpha } => commands::reconstruction(cli.model, alpha),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("JSON value"));
            } else {
                for line in &report.lines {
                    println!("{line}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&error_json(&err)).expect("JSON value"));
            }
            match &err {
                CliError::Usage(message) => eprintln!("error: {message}"),
                CliError::Failure { name, message } => {
                    if !cli.json {
                        println!("error[{name}]: {message}");
                    }
                }
            }
            ExitCode::from(err.exit_code())
        }
    }
}
