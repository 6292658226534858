//! Command-line front end for `clausen-core`: single evaluations, class
//! checks, theorem sweeps and their CSV/JSON reports.

pub mod args;
pub mod commands;
pub mod error;
pub mod grid;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use crate::args::{Cli, Command};
use crate::error::CliResult;

/// Parse `argv` and run the command. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return e.exit_code() as u8;
        }
    };
    match dispatch(&cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<u8> {
    match cmd {
        Command::Eval3f2(a) => commands::eval3f2(a, out),
        Command::Sums(a) => commands::sums(a, out),
        Command::CheckClass(a) => commands::check_class(a, out),
        Command::ApplyOperator(a) => commands::apply(a, out),
        Command::Verify(a) => commands::verify(a, out, err),
        Command::Sweep(a) => commands::sweep(a, err),
    }
}
