use std::io::Write;
use std::process;
use std::time::Instant;

use clap::Parser;
use serde_json::Value;
use wgrade_cli::args::Cli;
use wgrade_cli::{commands, ExitCode, Report};

fn main() {
    let cli = Cli::parse();
    let start = Instant::now();
    let echo = serde_json::to_value(&cli.command).unwrap_or(Value::Null);
    let (mut report, code) = match commands::run(&cli.command) {
        Ok(r) => {
            let code = r.exit_code();
            (r, code)
        }
        Err(e) => {
            eprintln!("wgrade: {e}");
            (Report::from_error(echo, &e), e.exit_code())
        }
    };
    report.wall_time_ms = start.elapsed().as_secs_f64() * 1000.0;
    let text = report.to_json();
    // a closed pipe downstream is not an error worth a panic
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, format!("{text}\n")) {
            eprintln!("wgrade: cannot write {}: {e}", path.display());
            process::exit(ExitCode::Input as i32);
        }
    }
    process::exit(code as i32);
}
