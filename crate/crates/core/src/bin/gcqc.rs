use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gcqc::cli::{cmd_build, cmd_distance, cmd_inspect, load_spec, BuildFlags, CliError, CommandOutcome};
use gcqc::DistanceOptions;

#[derive(Parser)]
#[command(name = "gcqc", version, about = "Build and check generalized concatenated quantum codes")]
struct Args {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Text,
    /// JSON
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Validate every code in a file and report ranks, dimensions and degeneracy.
    Inspect { file: PathBuf },
    /// Concatenate the chain with the outer codes.
    Build {
        file: PathBuf,
        /// Compute the exact distance of the result.
        #[arg(long)]
        exact_distance: bool,
        /// Check the exact distance against the lower bound (implies --exact-distance).
        #[arg(long)]
        verify_bound: bool,
        /// Check block-restriction weights level by level.
        #[arg(long)]
        verify_lemma1: bool,
        /// Enumeration cap, as an integer or 2^k.
        #[arg(long, value_parser = parse_cap)]
        cap: Option<u64>,
    },
    /// Exact minimum distance of the code a file defines.
    Distance {
        file: PathBuf,
        #[arg(long, value_parser = parse_cap)]
        cap: Option<u64>,
    },
}

fn parse_cap(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("2^") {
        Some(exp) => exp
            .parse::<u32>()
            .ok()
            .and_then(|e| 1u64.checked_shl(e)),
        None => s.parse().ok(),
    };
    parsed.ok_or_else(|| format!("`{s}` is not a count or a power of two like 2^26"))
}

fn options(cap: Option<u64>) -> DistanceOptions {
    let opts = DistanceOptions::default();
    match cap {
        Some(c) => opts.with_cap(c),
        None => opts,
    }
}

fn run(args: &Args) -> Result<CommandOutcome, CliError> {
    match &args.command {
        Command::Inspect { file } => cmd_inspect(&load_spec(file)?, &DistanceOptions::default()),
        Command::Build {
            file,
            exact_distance,
            verify_bound,
            verify_lemma1,
            cap,
        } => {
            let flags = BuildFlags {
                exact_distance: *exact_distance,
                verify_bound: *verify_bound,
                verify_block_weights: *verify_lemma1,
            };
            cmd_build(&load_spec(file)?, &flags, &options(*cap))
        }
        Command::Distance { file, cap } => cmd_distance(&load_spec(file)?, &options(*cap)),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(outcome) => {
            match args.output {
                Output::Text => print!("{}", outcome.report.to_text()),
                Output::Machine => print!("{}", outcome.report.to_json()),
            }
            if outcome.success {
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
