use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use hk_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut diag = stderr.lock();
    match run(&cli, &mut out, &mut diag) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            let _ = writeln!(diag, "error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
