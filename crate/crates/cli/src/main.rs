//! `liepair` command-line front-end.
//!
//! Every command prints one JSON report. Exit status: 0 when the command
//! ran (including a negative answer to a yes/no question), 1 when a
//! verification found a counterexample, 2 for bad input or usage.

mod commands;
mod input;
mod report;

use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use liepair::Execution;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use commands::{error_payload, run, Command, Options};
use report::{Report, Status};

#[derive(Parser)]
#[command(name = "liepair", version, about = "Exact PBW maps, Atiyah classes and homological vector fields of Lie pairs")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Input document (structure constants, subalgebra dimension, optional connection).
    #[arg(long, global = true)]
    input: Option<std::path::PathBuf>,
    /// Connection document overriding the one in the input.
    #[arg(long, global = true)]
    connection: Option<std::path::PathBuf>,
    /// Truncation weight.
    #[arg(long, global = true, default_value_t = 4)]
    weight: usize,
    /// Highest arity for linfty-check.
    #[arg(long, global = true, default_value_t = 3)]
    arity: usize,
    /// Comma-separated 1-based complement slots, e.g. `1,1,2`.
    #[arg(long, global = true)]
    monomial: Option<String>,
    /// Compact JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Run on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    /// Validate the pair and connection and print the canonical document.
    Validate,
    /// pbw images of complement monomials.
    Pbw,
    /// Preimages of quotient PBW-basis monomials.
    PbwInv,
    /// Tables of the R and H components of the h-action defect.
    Theta,
    /// Atiyah cocycle and whether its class vanishes.
    Atiyah,
    /// Taylor coefficients of the homological vector field.
    Hvf,
    /// Verify the Maurer–Cartan equation up to --weight.
    McCheck,
    /// Verify the generalized Jacobi identities up to --arity.
    LinftyCheck,
    /// Cocycle vanishing vs. pbw intertwining the h-actions.
    Horse,
    /// Covariant recursion for the coefficients under a flat torsion-free splitting.
    Zebra,
    /// Random coderivations of S(V): filtration preserved iff no constant term.
    SharkDemo {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Cmd {
    fn command(self) -> Command {
        match self {
            Cmd::Validate => Command::Validate,
            Cmd::Pbw => Command::Pbw,
            Cmd::PbwInv => Command::PbwInv,
            Cmd::Theta => Command::Theta,
            Cmd::Atiyah => Command::Atiyah,
            Cmd::Hvf => Command::Hvf,
            Cmd::McCheck => Command::McCheck,
            Cmd::LinftyCheck => Command::LinftyCheck,
            Cmd::Horse => Command::Horse,
            Cmd::Zebra => Command::Zebra,
            Cmd::SharkDemo { .. } => Command::SharkDemo,
        }
    }
}

fn file_echo(path: &Path) -> Value {
    let sha = fs::read(path).map(|b| hex::encode(Sha256::digest(&b))).ok();
    json!({ "path": path.display().to_string(), "sha256": sha })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (samples, seed) = match cli.command {
        Cmd::SharkDemo { samples, seed } => (samples, seed),
        _ => (0, 0),
    };
    let opts = Options {
        input: cli.input.clone(),
        connection: cli.connection.clone(),
        weight: cli.weight,
        arity: cli.arity,
        monomial: cli.monomial.clone(),
        samples,
        seed,
        exec: if cli.sequential { Execution::Sequential } else { Execution::Parallel },
    };
    let cmd = cli.command.command();
    let mut inputs = json!({ "weight": opts.weight });
    if let Some(p) = &opts.input {
        inputs["input"] = file_echo(p);
    }
    if let Some(p) = &opts.connection {
        inputs["connection"] = file_echo(p);
    }
    match cmd {
        Command::LinftyCheck => inputs["arity"] = json!(opts.arity),
        Command::Pbw | Command::PbwInv => inputs["monomial"] = json!(opts.monomial),
        Command::SharkDemo => {
            inputs["samples"] = json!(samples);
            inputs["seed"] = json!(seed);
        }
        _ => {}
    }

    let start = Instant::now();
    let (status, payload) = match run(cmd, &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("liepair {}: {e}", cmd.name());
            (Status::Error, error_payload(&e))
        }
    };
    let report = Report { command: cmd.name().to_string(), inputs, status, payload };
    println!("{}", report.render(start.elapsed(), cli.pretty));
    ExitCode::from(status.exit_code())
}
