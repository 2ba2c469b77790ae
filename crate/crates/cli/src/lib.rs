//! Command-line frontend for `glinv-core`.
//!
//! [`run`] is the whole program minus process setup, so the golden corpus
//! and the tests can drive it in-process.

mod args;
mod commands;
mod input;
mod selftest;

use std::io::Write;

use clap::Parser;
use serde_json::json;

pub use args::{Cli, Format};
pub use selftest::{corpus, Case};

/// Exit status for domain errors.
pub const EXIT_DOMAIN: i32 = 1;
/// Exit status for usage errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(glinv_core::Error),
    /// Selftest mismatches; the report has already been written.
    Mismatch,
}

impl Failure {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }

    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Domain(_) | Failure::Mismatch => EXIT_DOMAIN,
        }
    }
}

impl From<glinv_core::Error> for Failure {
    fn from(e: glinv_core::Error) -> Self {
        Failure::Domain(e)
    }
}

/// Text in all three formats; the command picks one.
pub(crate) struct Report {
    pub json: serde_json::Value,
    pub csv: String,
    pub pretty: String,
}

/// Parses `argv` (without the program name) and runs one command.
pub fn run<S: AsRef<str>>(argv: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let full = std::iter::once("glinv").chain(argv.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(full) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let format = cli.format;
    let mut notices = Vec::new();
    let result = commands::dispatch(cli.command, format, &mut notices, out);
    notices.dedup();
    for n in &notices {
        let _ = writeln!(err, "{n}");
    }
    match result {
        Ok(()) => 0,
        Err(f) => {
            let (kind, message) = match &f {
                Failure::Usage(m) => ("usage", m.clone()),
                Failure::Domain(e) => (e.kind(), e.to_string()),
                Failure::Mismatch => return f.code(),
            };
            if format == Format::Json {
                let obj = json!({ "error": { "kind": kind, "message": message } });
                let _ = writeln!(out, "{obj}");
            } else {
                let _ = writeln!(err, "error ({kind}): {message}");
            }
            f.code()
        }
    }
}
