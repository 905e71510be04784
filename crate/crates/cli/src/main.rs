use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use qbound_cli::{run, Cli, CliError, RunConfig};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match RunConfig::try_from(cli).and_then(|cfg| emit(&cfg)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qbound: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn emit(cfg: &RunConfig) -> Result<(), CliError> {
    let report = run(cfg)?;
    match &cfg.output {
        Some(path) => std::fs::write(path, report)?,
        None => std::io::stdout().lock().write_all(report.as_bytes())?,
    }
    Ok(())
}
