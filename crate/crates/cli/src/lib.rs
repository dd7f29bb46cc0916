//! The `foamcalc` command line: argument parsing, subcommands and the
//! acceptance suite behind `selftest`.
//!
//! Exit codes: 0 on success, 1 on domain errors (printed as a JSON object
//! with `kind` and `message`) or failed checks, 2 on usage errors.

pub mod acceptance;
pub mod commands;
pub mod error;

pub use commands::{Cli, Command, Output};
pub use error::{CliError, Result};

use clap::Parser;
use std::io::Write;

/// Parse `args` (including the program name), run, and write to the given
/// streams. Returns the exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    if let Some(n) = cli.jobs {
        if n == 0 {
            let _ = writeln!(err, "error: --jobs must be at least 1");
            return 2;
        }
        // fails only if the pool already exists, e.g. on a second call in one process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let jobs = rayon::current_num_threads();
    match commands::run(&cli.command) {
        Ok(o) => {
            let _ = writeln!(err, "{} jobs={jobs}", o.header(cli.command.name()));
            let _ = write!(out, "{}", o.stdout);
            i32::from(o.failed)
        }
        Err(e) => {
            let _ = writeln!(out, "{}", e.to_json());
            e.exit_code()
        }
    }
}
