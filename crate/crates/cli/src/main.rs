mod args;
mod commands;
mod table;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use verify::Outcome;

const VERIFICATION_FAILED: u8 = 1;
const USAGE: u8 = 2;
const NOT_CERTIFIED: u8 = 3;

fn exit_code_for(error: &logsine_core::Error) -> u8 {
    if error.is_certification() {
        NOT_CERTIFIED
    } else {
        USAGE
    }
}

fn emit(text: &str) -> ExitCode {
    let mut stdout = std::io::stdout().lock();
    match stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
    {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("logsine: cannot write output: {e}");
            ExitCode::from(VERIFICATION_FAILED)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (table, format, code) = match &cli.command {
        Command::Bernoulli(config) => (Ok(commands::bernoulli(config)), config.format, 0),
        Command::Zeta(config) => (commands::zeta(config), config.format, 0),
        Command::Logsine(config) => (commands::logsine(config), config.format, 0),
        Command::Verify { suite, config } => {
            let checks = verify::run(*suite, config.n_max, config.tolerance);
            let uncertified =
                |c: &verify::Check| matches!(&c.outcome, Outcome::Error(e) if e.is_certification());
            // a genuine mismatch outranks a tolerance that could not be met
            let code = if checks.iter().any(|c| !c.passed() && !uncertified(c)) {
                VERIFICATION_FAILED
            } else if checks.iter().any(uncertified) {
                NOT_CERTIFIED
            } else {
                0
            };
            (Ok(verify::to_table(&checks)), config.format, code)
        }
    };

    let table = match table {
        Ok(table) => table,
        Err(e) => {
            eprintln!("logsine: {e}");
            return ExitCode::from(exit_code_for(&e));
        }
    };
    let text = match table.render(format) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("logsine: cannot render output: {e}");
            return ExitCode::from(VERIFICATION_FAILED);
        }
    };
    let written = emit(&text);
    if code == 0 {
        written
    } else {
        ExitCode::from(code)
    }
}
