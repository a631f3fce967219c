use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qschur_hh::cli::{exit, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = cli.command.into_config();
    match run(&config) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            if out
                .write_all(outcome.rendered.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(exit::RUNTIME as u8);
            }
            if outcome.cache_hit {
                eprintln!("resolution loaded from cache");
            }
            if let Some(f) = &outcome.failure {
                eprintln!("qschur-hh: {f}");
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("qschur-hh: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
