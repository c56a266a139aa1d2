use std::process::ExitCode;

use clap::Parser;
use efunctions::cli::{self, Cli};

fn main() -> ExitCode {
    let parsed = Cli::parse();
    match cli::run(parsed) {
        Ok(true) => ExitCode::from(cli::EXIT_OK as u8),
        Ok(false) => ExitCode::from(cli::EXIT_VERIFY_FAILED as u8),
        Err(e) => {
            eprintln!("efn: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}
