mod args;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qls_core::{load_registry, Error};

use args::{Cli, Command, Format};
use commands::Report;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io { path: String, source: std::io::Error },
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Io { path, source } => write!(f, "cannot write {path}: {source}"),
        }
    }
}

impl CliError {
    /// 1 for I/O, 3 for numerical non-convergence, 2 for everything the
    /// caller can fix by changing arguments or data.
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Core(Error::Io { .. }) => 1,
            CliError::Core(e) if e.is_numerical() => 3,
            CliError::Core(_) => 2,
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let registry = load_registry(cli.substances.as_deref())?;
    let report = match &cli.command {
        Command::Table1 => commands::table1(&registry),
        Command::Table2(a) => commands::table2(&registry, a, cli.verbose)?,
        Command::States(a) => commands::states(&registry, a, cli.verbose)?,
        Command::PhaseDiagram(a) => commands::phase_diagram(a, cli.verbose)?,
        Command::Classify(a) => commands::classify_point(a)?,
        Command::Couple(c) => commands::couple(c)?,
    };
    let text = match (report, cli.format) {
        (Report::Table(t), f) => t.render(f.unwrap_or(Format::Csv)),
        (Report::Single { text, .. }, None) => text + "\n",
        (Report::Single { table, .. }, Some(f)) => table.render(f),
    };
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
