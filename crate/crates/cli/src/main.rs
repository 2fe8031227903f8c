mod commands;
mod config;
mod report;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use crate::commands::Failure;
use crate::config::{Args, RunConfig};

fn fail(message: &str, code: u8) -> ExitCode {
    eprintln!("verma: {message}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            return fail(first.trim_start_matches("error: "), 2);
        }
    };
    let config = match RunConfig::from_args(args) {
        Ok(c) => c,
        Err(msg) => return fail(&msg, 2),
    };
    let report = match commands::run(&config) {
        Ok(r) => r,
        Err(f) => return fail(f.message(), f.exit_code()),
    };
    let text = match report.render(&config) {
        Ok(t) => t,
        Err(msg) => return fail(&msg, 1),
    };
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
        return ExitCode::from(1);
    }
    if let Some(first) = report.violations.first() {
        let failure = Failure::Violated(first.clone());
        return fail(failure.message(), failure.exit_code());
    }
    ExitCode::SUCCESS
}
