mod args;
mod commands;
mod render;

use std::fmt;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Usage and input errors; all map to exit code 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Json { what: String, err: serde_json::Error },
    Core(horn_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Json { what, err } => write!(f, "invalid JSON in {what}: {err}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<horn_core::Error> for CliError {
    fn from(e: horn_core::Error) -> Self {
        CliError::Core(e)
    }
}

/// What a command printed and whether its mathematical verdict was positive.
pub struct Output {
    pub body: String,
    pub verdict: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().expect("thread pool is built once");
    }
    match std::panic::catch_unwind(|| commands::run(&cli)) {
        Ok(Ok(out)) => {
            let mut stdout = std::io::stdout().lock();
            let newline = if out.body.ends_with('\n') { "" } else { "\n" };
            // a closed pipe downstream is not an error of ours
            let _ = write!(stdout, "{}{newline}", out.body).and_then(|_| stdout.flush());
            ExitCode::from(if out.verdict { 0 } else { 1 })
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(_) => {
            eprintln!("error: internal assertion failed");
            ExitCode::from(3)
        }
    }
}
