//! The `oddity` command line.
//!
//! Exit status is 0 on success (and, for `check`, when every expectation
//! holds), 1 when some expectation fails, 2 on usage, parse or evaluation
//! errors.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use oddity_core::sexp::Pos;
use oddity_core::{judge, Scenario, Theory, Verdict, DEFAULT_BUDGET_BITS};
use rayon::prelude::*;

use crate::report::{render, render_explain, Format, Report};
use crate::scenario::{parse_scenario, ScenarioError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "oddity", version, about = "Judge the oddness of quantified sentences in context")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate scenarios and print one report each.
    Run(RunConfig),
    /// Compare each scenario's aggregate verdict with its `(expect ...)`.
    Check(RunConfig),
    /// Print every theory's derivation for one scenario.
    Explain(RunConfig),
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Scenario files.
    #[arg(required = true)]
    pub paths: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Also print derivation traces.
    #[arg(long)]
    pub explain: bool,
    /// Comma-separated theories to enable, overriding the scenario files.
    #[arg(long, value_delimiter = ',')]
    pub theories: Option<Vec<String>>,
    /// Largest universe size to enumerate, overriding `(individuals N)`.
    #[arg(long)]
    pub bound: Option<usize>,
    /// Stop at the first error or mismatch.
    #[arg(long)]
    pub fail_fast: bool,
}

/// An error tied to an input file.
#[derive(Debug)]
pub struct Diagnostic {
    pub path: PathBuf,
    pub pos: Option<Pos>,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pos {
            Some(pos) => write!(f, "{}:{}: {}", self.path.display(), pos, self.message),
            None => write!(f, "{}: {}", self.path.display(), self.message),
        }
    }
}

fn diagnostic(path: &Path, e: &ScenarioError) -> Diagnostic {
    // Positioned errors already print as `line:col: message`.
    let text = e.to_string();
    let message = match e.pos() {
        Some(pos) => text.strip_prefix(&format!("{pos}: ")).map(str::to_string).unwrap_or(text),
        None => text,
    };
    Diagnostic { path: path.to_path_buf(), pos: e.pos(), message }
}

fn parse_theories(names: &[String]) -> Result<Vec<Theory>, String> {
    let mut out = Vec::new();
    for name in names {
        let t = Theory::from_name(name.trim()).ok_or_else(|| {
            let known: Vec<&str> = Theory::ALL.iter().map(|t| t.name()).collect();
            format!("unknown theory `{name}` (known: {})", known.join(", "))
        })?;
        if !out.contains(&t) {
            out.push(t);
        }
    }
    if out.is_empty() {
        return Err("--theories needs at least one theory".into());
    }
    Ok(out)
}

/// Reads and validates a scenario, then applies command-line overrides.
pub fn load(path: &Path, config: &RunConfig, theories: Option<&[Theory]>) -> Result<Scenario, Diagnostic> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Diagnostic { path: path.to_path_buf(), pos: None, message: e.to_string() })?;
    let mut scenario = parse_scenario(&text).map_err(|e| diagnostic(path, &e))?;
    if let Some(ts) = theories {
        scenario.enabled = ts.to_vec();
    }
    if let Some(bound) = config.bound {
        scenario.max_universe = bound;
    }
    Ok(scenario)
}

/// Loads and judges one file.
pub fn evaluate(path: &Path, config: &RunConfig, theories: Option<&[Theory]>) -> Result<(Scenario, Report), Diagnostic> {
    let scenario = load(path, config, theories)?;
    let judgment = judge(&scenario).map_err(|e| diagnostic(path, &ScenarioError::from(e)))?;
    Ok((scenario, Report::from(&judgment)))
}

fn validate(config: &RunConfig) -> Result<Option<Vec<Theory>>, String> {
    if let Some(bound) = config.bound {
        if bound == 0 || bound > DEFAULT_BUDGET_BITS as usize {
            return Err(format!("--bound must be between 1 and {DEFAULT_BUDGET_BITS}"));
        }
    }
    config.theories.as_deref().map(parse_theories).transpose()
}

/// Parses `args` (program name first) and runs the command, writing reports
/// to `out` and diagnostics to `err`. Returns the exit status.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let (config, mode) = match &cli.command {
        Command::Run(c) => (c, Mode::Run),
        Command::Check(c) => (c, Mode::Check),
        Command::Explain(c) => (c, Mode::Explain),
    };
    let theories = match validate(config) {
        Ok(t) => t,
        Err(message) => {
            let _ = writeln!(err, "oddity: {message}");
            return EXIT_ERROR;
        }
    };
    if mode == Mode::Explain && config.paths.len() != 1 {
        let _ = writeln!(err, "oddity: explain takes exactly one scenario file");
        return EXIT_ERROR;
    }
    let results: Vec<Result<(Scenario, Report), Diagnostic>> =
        config.paths.par_iter().map(|p| evaluate(p, config, theories.as_deref())).collect();
    match mode {
        Mode::Run => cmd_run(&results, config, out, err),
        Mode::Check => cmd_check(&results, config, out, err),
        Mode::Explain => cmd_explain(&results, config, out, err),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Run,
    Check,
    Explain,
}

type Evaluated = Result<(Scenario, Report), Diagnostic>;

fn cmd_run(results: &[Evaluated], config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut status = EXIT_OK;
    for (i, result) in results.iter().enumerate() {
        match result {
            Ok((_, report)) => {
                if config.format == Format::Table && i > 0 {
                    let _ = writeln!(out);
                }
                let _ = out.write_all(render(report, config.format).as_bytes());
                if config.explain && config.format == Format::Table {
                    let _ = out.write_all(render_explain(report).as_bytes());
                }
            }
            Err(d) => {
                let _ = writeln!(err, "{d}");
                status = EXIT_ERROR;
                if config.fail_fast {
                    break;
                }
            }
        }
    }
    status
}

fn cmd_check(results: &[Evaluated], config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut errors = 0;
    let mut mismatches = 0;
    let mut checked = 0;
    for result in results {
        match result {
            Ok((scenario, report)) => match scenario.expect {
                None => {
                    let _ = writeln!(err, "{}: scenario `{}` has no (expect ...)", path_of(config, scenario), scenario.name);
                    errors += 1;
                }
                Some(expected) => {
                    checked += 1;
                    let got = Verdict::from_name(&report.aggregate).expect("aggregate is a verdict name");
                    let fired: Vec<String> = report.fired().map(|t| format!("{} ({})", t.name, t.mechanism)).collect();
                    let fired = if fired.is_empty() { "none".to_string() } else { fired.join(", ") };
                    if got == expected {
                        let _ = writeln!(out, "ok {}: {} [fired: {fired}]", scenario.name, got.name());
                    } else {
                        mismatches += 1;
                        let _ = writeln!(
                            out,
                            "MISMATCH {}: expected {}, got {} [fired: {fired}]",
                            scenario.name,
                            expected.name(),
                            got.name()
                        );
                    }
                    if config.explain {
                        let _ = out.write_all(render_explain(report).as_bytes());
                    }
                }
            },
            Err(d) => {
                let _ = writeln!(err, "{d}");
                errors += 1;
            }
        }
        if config.fail_fast && (errors > 0 || mismatches > 0) {
            break;
        }
    }
    let _ = writeln!(out, "{checked} checked, {mismatches} mismatched, {errors} errors");
    if errors > 0 {
        EXIT_ERROR
    } else if mismatches > 0 {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    }
}

fn path_of(config: &RunConfig, scenario: &Scenario) -> String {
    // Reports keep only the scenario name; fall back to it when the file is
    // ambiguous.
    match config.paths.as_slice() {
        [one] => one.display().to_string(),
        _ => scenario.name.clone(),
    }
}

fn cmd_explain(results: &[Evaluated], config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match &results[0] {
        Ok((_, report)) => {
            let text = match config.format {
                Format::Table => render_explain(report),
                Format::Json => render(report, Format::Json),
            };
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(d) => {
            let _ = writeln!(err, "{d}");
            EXIT_ERROR
        }
    }
}
