use std::process::ExitCode;

use clap::Parser;
use qmc_cli::args::{Cli, Command, OutputFormat};
use qmc_cli::{check_schema, run, CliError, Report, THREADS_ENV};

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Solve(_) => "solve",
        Command::ClosedForm(_) => "closed-form",
        Command::Brute(_) => "brute",
        Command::Verify(_) => "verify",
        Command::Lr(_) => "lr",
        Command::Eta(_) => "eta",
        Command::Sweep(_) => "sweep",
        Command::Spectrum(_) => "spectrum",
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Computation(format!("cannot start thread pool: {e}")))
}

fn emit(report: &Report, format: OutputFormat, name: &str) -> Result<(), CliError> {
    match format {
        OutputFormat::Text => print!("{}", report.text),
        OutputFormat::Json => {
            check_schema(name, &report.json)
                .map_err(|errs| CliError::Computation(format!("output violates its schema: {}", errs.join("; "))))?;
            println!("{}", serde_json::to_string_pretty(&report.json).expect("JSON values serialize"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let result = configure_threads().and_then(|()| run(&cli.command));
    let err = match result {
        Ok(report) => match emit(&report, cli.output, name) {
            Ok(()) => return ExitCode::SUCCESS,
            Err(e) => e,
        },
        Err(CliError::VerificationFailed { report, failed }) => {
            if let Err(e) = emit(&report, cli.output, name) {
                eprintln!("error: {e}");
            }
            CliError::VerificationFailed { report, failed }
        }
        Err(e) => e,
    };
    eprintln!("error: {err}");
    ExitCode::from(err.exit_code() as u8)
}
