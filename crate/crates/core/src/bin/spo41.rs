use std::io::Write;
use std::panic;
use std::process::ExitCode;

use spo41::cli::{run_cli, EXIT_INTERNAL};

fn main() -> ExitCode {
    let result = panic::catch_unwind(|| {
        let stdout = std::io::stdout();
        let stderr = std::io::stderr();
        let mut out = std::io::BufWriter::new(stdout.lock());
        let code = run_cli(std::env::args_os(), &mut out, &mut stderr.lock());
        let _ = out.flush();
        code
    });
    // a panic means an invariant was broken somewhere below the CLI
    ExitCode::from(result.unwrap_or(EXIT_INTERNAL) as u8)
}
