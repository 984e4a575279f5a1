mod args;
mod commands;
mod render;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("symbases: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
