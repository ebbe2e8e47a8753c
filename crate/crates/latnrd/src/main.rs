use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use latnrd::RunSpec;

fn main() -> ExitCode {
    let spec = RunSpec::parse();
    let outcome = match spec.execute() {
        Ok(outcome) => outcome,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(err.exit_code());
        }
    };
    let written = match &spec.out {
        Some(path) => std::fs::write(path, &outcome.output),
        None => std::io::stdout().lock().write_all(outcome.output.as_bytes()),
    };
    if let Err(err) = written {
        eprintln!("error: {err}");
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.status)
}
