use std::io;
use std::process::ExitCode;

use clap::Parser;
use singular_forms::{run, Cli, JobSpec};

fn main() -> ExitCode {
    let job = JobSpec::from(Cli::parse());
    let stdout = io::stdout();
    match run(&job, &mut io::stdin().lock(), &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("singular-forms: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
