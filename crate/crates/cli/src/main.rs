use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use lukfri_cli::commands::{exit_code_for, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(err) => {
            let _ = out.flush();
            eprintln!("error: {err:#}");
            exit_code_for(&err)
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
