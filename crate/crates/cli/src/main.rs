use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;
use igt_cli::CliError;

fn main() -> ExitCode {
    match igt_cli::run(std::env::args_os()) {
        Ok(report) => match print(&report) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
        Err(CliError::Usage(e)) => {
            let _ = e.print();
            ExitCode::from(e.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn print(report: &str) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(report.as_bytes())
        .context("writing the report")?;
    out.flush().context("flushing standard output")
}
