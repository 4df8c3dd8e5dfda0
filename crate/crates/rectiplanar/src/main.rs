use clap::Parser;
use rectiplanar::cli::{run, JobConfig};
use std::process::ExitCode;

fn main() -> ExitCode {
    let cfg = JobConfig::parse();
    ExitCode::from(run(&cfg) as u8)
}
