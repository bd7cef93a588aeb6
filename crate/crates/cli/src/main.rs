//! Command-line driver: identity suites, bracket tables, oracle comparison,
//! Hopf brackets and cohomology dimensions, reported as JSON, CSV or text.

mod report;
mod tasks;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use report::{Format, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Task {
    Verify,
    BracketA,
    BracketTaft,
    Hopf,
    OracleCompare,
    Dims,
}

impl Task {
    fn default_max_degree(self) -> usize {
        match self {
            Task::Verify => 6,
            Task::BracketA | Task::BracketTaft | Task::OracleCompare => 2,
            Task::Hopf | Task::Dims => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Task::Verify => "verify",
            Task::BracketA => "bracket-a",
            Task::BracketTaft => "bracket-taft",
            Task::Hopf => "hopf",
            Task::OracleCompare => "oracle-compare",
            Task::Dims => "dims",
        }
    }
}

/// Gerstenhaber brackets on HH*(k[x]/(x^p)), HH*(T_p) and H*(T_p, k).
#[derive(Parser, Debug)]
#[command(name = "gerstenhaber", version)]
struct Args {
    /// The integer p > 2 (order of x and of g).
    #[arg(long, default_value_t = 3)]
    p: usize,
    #[arg(long, value_enum)]
    task: Task,
    /// Highest cohomological degree examined (default depends on the task).
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for the randomized checks of `verify`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if args.p <= 2 {
        return usage(&format!("--p must be greater than 2, got {}", args.p));
    }
    if args.p > 64 {
        return usage(&format!("--p {} is too large to tabulate", args.p));
    }
    let max_degree = args.max_degree.unwrap_or_else(|| args.task.default_max_degree());
    if max_degree < 1 {
        return usage("--max-degree must be at least 1");
    }
    if args.task == Task::OracleCompare && max_degree > 2 {
        return usage("oracle-compare supports --max-degree up to 2");
    }

    let mut report = Report::new(args.p, args.task);
    if let Err(e) = tasks::run(&mut report, args.task, args.p, max_degree, args.seed) {
        report.fail(format!("{e}"));
    }

    let rendered = report.render(args.format);
    let written = match &args.out {
        Some(path) => fs::write(path, rendered.as_bytes()),
        None => io::stdout().lock().write_all(rendered.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(1);
    }
    if report.failures().is_empty() {
        ExitCode::SUCCESS
    } else {
        for f in report.failures() {
            eprintln!("failed: {f}");
        }
        ExitCode::from(1)
    }
}
