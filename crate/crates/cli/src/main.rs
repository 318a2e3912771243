mod args;
mod commands;
mod text;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::{CliError, Outcome};

/// Version of the JSON report layout; bumped on incompatible changes.
pub const SCHEMA_VERSION: u32 = 1;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json;
    let name = cli.command.name();
    let result = commands::run(&cli.command);
    let mut out = std::io::stdout().lock();
    let code = match result {
        Ok(Outcome { value, text, code }) => {
            if json {
                let doc = commands::envelope(name, value);
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializable")
                );
            } else {
                let _ = write!(out, "{text}");
            }
            code
        }
        Err(e) => {
            if json {
                let doc = commands::envelope(name, e.to_json());
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializable")
                );
            } else {
                eprintln!("error: {e}");
            }
            e.exit_code()
        }
    };
    ExitCode::from(code)
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Rejected { .. } => 1,
        }
    }
}
