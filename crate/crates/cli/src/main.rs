use std::process::ExitCode;

use clap::Parser;
use superfrob_cli::app::{run, Cli, Failure};

/// `SUPERFROB_THREADS` caps the rayon pool.
fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("SUPERFROB_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Failure::Usage(format!("SUPERFROB_THREADS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Internal(format!("thread pool: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| run(cli));
    match result {
        Ok(outcome) => {
            match &outcome.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &outcome.text) {
                        eprintln!("superfrob: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{}", outcome.text),
            }
            ExitCode::from(outcome.code as u8)
        }
        Err(f) => {
            match &f {
                Failure::Usage(msg) => eprintln!("superfrob: {msg}\n\nRun `superfrob --help` for usage."),
                Failure::Internal(msg) => eprintln!("superfrob: {msg}"),
            }
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
