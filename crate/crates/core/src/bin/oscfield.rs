use std::process::ExitCode;

use clap::Parser;
use oscfield::cli::{run, Cli};

fn main() -> ExitCode {
    run(&Cli::parse())
}
