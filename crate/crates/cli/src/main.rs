use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use monostab_cli::commands::report_exit_code;
use monostab_cli::{exit, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.global.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(workers.max(1))
            .build_global()
        {
            eprintln!("monostab: cannot start {workers} workers: {e}");
            return ExitCode::from(exit::RESOURCE as u8);
        }
    }
    match run(&cli.command, &cli.global) {
        Ok(report) => {
            let out = report.emit(cli.global.format.into());
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::from(report_exit_code(&report) as u8)
        }
        Err(e) => {
            eprintln!("monostab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
