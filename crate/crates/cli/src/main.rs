mod args;
mod cache;
mod commands;
mod error;
mod validate;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::RunConfig;
pub use error::CliError;

fn run(cli: Cli) -> Result<(), CliError> {
    let mut cfg = RunConfig::from_args(&cli.run);
    match cli.command {
        Command::Coeff { triple, l, m, verify, json } => commands::coeff(&cfg, &triple, l, m, verify, json),
        Command::Oracle { triple } => commands::oracle(&cfg, &triple),
        Command::BuildQuiver { l, m, stage, out } => commands::build_quiver(l, m, stage, out.as_deref()),
        Command::Cone { l, m, orientation, out } => commands::cone(&cfg, l, m, orientation, out.as_deref()),
        Command::Count { l, m, theta, json } => commands::count(&cfg, l, m, &theta, json),
        Command::Validate { l, m, level } => {
            cfg.level = level;
            let report = validate::run(&cfg, l, m)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            if report.passed {
                Ok(())
            } else {
                Err(CliError::Mismatch("validation failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
