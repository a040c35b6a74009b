use std::io::Write;
use std::process::ExitCode;

use bernkit::{execute, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(rendered) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(rendered.text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(rendered.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
