//! `lmpoly`: matching and Laplacian matching polynomials from the command line.

mod compute;
mod config;
mod generate;
mod input;
mod report;
mod scan;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::Config;

#[derive(Debug, Parser)]
#[command(name = "lmpoly", version, about = "Matching and Laplacian matching polynomials of graphs")]
struct Cli {
    #[command(flatten)]
    config: Config,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print M(G, x), LM(G, x) and the roots of LM(G, x).
    Compute(compute::ComputeArgs),
    /// Run checks on one graph; exits 1 if any fails.
    Verify(verify::VerifyArgs),
    /// Run checks on a graph6 stream; exits 1 if any fails.
    Scan(scan::ScanArgs),
    /// Write graph6 corpora.
    Generate(generate::GenerateArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Compute(a) => compute::run(a, &cli.config, &mut out),
        Command::Verify(a) => verify::run(a, &cli.config, &mut out),
        Command::Scan(a) => scan::run(a, &cli.config, &mut out, &mut std::io::stderr()),
        Command::Generate(a) => generate::run(a, &cli.config, &mut out),
    };
    let flushed = out.flush();
    match result {
        Ok(true) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
