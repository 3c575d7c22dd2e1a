mod args;
mod commands;
mod output;

use std::io;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

const EXIT_DOMAIN: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_ORACLE: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Real(a) => commands::real(a),
        Command::Padic(a) => commands::padic(a),
        Command::Table(a) => commands::table(a),
        Command::Spectrum(a) => commands::spectrum(a),
        Command::Verify(a) => match commands::budget_from_env() {
            Ok(budget) => commands::verify(a, budget),
            Err(msg) => {
                eprintln!("error: {msg}");
                return ExitCode::from(EXIT_USAGE);
            }
        },
    };
    let report = match result {
        Ok(report) => report,
        Err(e) => {
            eprintln!("{}: {e}", e.name());
            return ExitCode::from(EXIT_DOMAIN);
        }
    };
    if let Err(e) = report.write(cli.format, &mut io::stdout().lock()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_DOMAIN);
        }
    }
    let oracle_failed = report.record.kind == output::Kind::Verification
        && report.record.payload["all_passed"] != serde_json::Value::Bool(true);
    if oracle_failed {
        ExitCode::from(EXIT_ORACLE)
    } else {
        ExitCode::SUCCESS
    }
}
