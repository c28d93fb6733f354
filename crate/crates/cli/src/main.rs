mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use dompoly::Error;

use args::{Cli, Command};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        e if e.is_capacity() => EXIT_CAPACITY,
        Error::AtParameter { source, .. } => exit_code(source),
        Error::InvalidParameter(_)
        | Error::InvalidVertex { .. }
        | Error::SelfLoop(_)
        | Error::Parse { .. }
        | Error::RejectedGamma(_)
        | Error::TooFewTerms { .. }
        | Error::KindMismatch { .. }
        | Error::MethodMismatch { .. }
        | Error::Io(_) => EXIT_USAGE,
        _ => EXIT_FAILED,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = commands::caps(&cli);
    let result = match &cli.command {
        Command::Compute(a) => commands::compute_cmd(a, &caps, cli.format),
        Command::Verify(a) => commands::verify_cmd(a, cli.seed, cli.format),
        Command::Sequence(a) => commands::sequence_cmd(a, &caps, cli.format),
        Command::Interpolate(a) => commands::interpolate_cmd(a, &caps, cli.format),
    };
    match result {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(outcome.output.as_bytes());
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
