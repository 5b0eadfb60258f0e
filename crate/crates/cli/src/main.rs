use std::io::Write;
use std::process::ExitCode;

use catphase_cli::{parse_config, parse_threads, run, CliError, THREADS_VAR};

fn main() -> ExitCode {
    match try_main() {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Info(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn try_main() -> Result<u8, CliError> {
    let threads = std::env::var(THREADS_VAR).ok();
    if let Some(n) = parse_threads(threads.as_deref())? {
        catphase::parallel::init_thread_pool(n).map_err(CliError::Usage)?;
    }
    let config = parse_config(std::env::args_os().skip(1))?;
    let outcome = run(&config)?;
    for note in &outcome.notes {
        eprintln!("{note}");
    }
    match &config.output {
        Some(path) => std::fs::write(path, &outcome.body).map_err(CliError::Io)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(&outcome.body)
                .and_then(|_| out.flush())
                .map_err(CliError::Io)?;
        }
    }
    Ok(outcome.exit_code())
}
