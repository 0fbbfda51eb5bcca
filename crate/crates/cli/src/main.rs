use std::io::{self, Write};
use std::process::ExitCode;

use carleson_cli::args::Cli;
use carleson_cli::commands::{run, thread_count};
use clap::error::ErrorKind;
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let threads = thread_count(std::env::var("CARLESON_THREADS").ok().as_deref());
    match threads {
        Ok(Some(n)) => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                eprintln!("cannot configure {n} threads: {e}");
                return ExitCode::from(1);
            }
        }
        Ok(None) => {}
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(e.exit_code());
        }
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut err = io::stderr();
    let code = match run(&cli.command, &mut out, &mut err) {
        Ok(status) => status.exit_code(),
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
