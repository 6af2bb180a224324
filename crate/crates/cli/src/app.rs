//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{parse_tol_override, Grid, SuiteConfig};
use crate::plotdata::{self, Figure};
use crate::suites::{run_suites, SUITES};
use crate::tables::{self, Table};
use crate::{eval, CliError, CliResult, EXIT_CONFIG, EXIT_FAIL, EXIT_OK};

#[derive(Debug, Parser)]
#[command(
    name = "eiskern",
    version,
    about = "Evaluate and cross-check Eisenstein, Hilbert–Eisenstein and Omega functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run identity suites and write a JSON report
    Verify(VerifyArgs),
    /// Evaluate one function at one point
    Eval(EvalArgs),
    /// Write a CSV table
    Table(TableArgs),
    /// Write CSV plot data for a figure
    Plotdata(PlotArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated suite names (default: all)
    #[arg(long, value_delimiter = ',')]
    pub suites: Vec<String>,
    /// List the suites and exit
    #[arg(long)]
    pub list: bool,
    /// JSON file with a full suite configuration; flags override it
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Tolerance override for every record of a suite, NAME=VALUE (repeatable)
    #[arg(long = "tol", value_name = "NAME=VALUE")]
    pub tol: Vec<String>,
    /// Sampling grid re_min,re_max,im_min,im_max,step[,im_step]
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,
    /// Seed for grid jitter
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads (0: one per core); also read from EISKERN_THREADS
    #[arg(long)]
    pub threads: Option<usize>,
    /// Record wall-clock time per suite (makes reports non-reproducible)
    #[arg(long)]
    pub timing: bool,
    /// Output file (default: stdout)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print the per-suite summary to stderr
    #[arg(long, short)]
    pub verbose: bool,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct EvalArgs {
    /// Function name, e.g. epsilon, he, omega, zeta
    pub function: String,
    /// Arguments; complex numbers as 0.3-1.2i (write -i as 0-1i)
    pub args: Vec<String>,
    /// Representation to evaluate through
    #[arg(long)]
    pub route: Option<String>,
    /// Print JSON instead of text
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub name: Table,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[arg(value_enum)]
    pub figure: Figure,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn emit(text: &str, path: Option<&PathBuf>, out: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn suite_config(a: &VerifyArgs) -> CliResult<SuiteConfig> {
    let mut cfg = match &a.config {
        Some(p) => SuiteConfig::from_json_file(p)?,
        None => SuiteConfig::default(),
    };
    for t in &a.tol {
        let (name, v) = parse_tol_override(t)?;
        cfg.tolerance_overrides.insert(name, v);
    }
    if let Some(g) = &a.grid {
        cfg.grid = Grid::parse(g)?;
    }
    if let Some(s) = a.seed {
        cfg.seed = s;
    }
    if let Some(t) = a.threads {
        cfg.threads = t;
    }
    cfg.timing |= a.timing;
    Ok(cfg)
}

fn verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    if a.list {
        for s in SUITES {
            let tag = if s.report_only { " (report-only)" } else { "" };
            writeln!(out, "{:<22} {}{tag}", s.name, s.summary)?;
        }
        return Ok(EXIT_OK);
    }
    let cfg = suite_config(a)?;
    let report = run_suites(&cfg, &a.suites)?;
    emit(&report.to_json(), a.out.as_ref(), out)?;
    let pass = report.all_pass();
    if a.verbose || !pass {
        err.write_all(report.summary().as_bytes())?;
    }
    Ok(if pass { EXIT_OK } else { EXIT_FAIL })
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    match cli.command {
        Command::Verify(a) => verify(&a, out, err),
        Command::Eval(a) => {
            let cfg = SuiteConfig::default();
            let r = eval::evaluate(
                &a.function,
                &a.args,
                a.route.as_deref(),
                &cfg.sum_control,
                &cfg.quad_control,
            )?;
            let text = if a.json {
                let mut s =
                    serde_json::to_string_pretty(&r).map_err(|e| CliError::Usage(e.to_string()))?;
                s.push('\n');
                s
            } else {
                r.text()
            };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Table(a) => {
            let csv = tables::render(a.name, &SuiteConfig::default().sum_control)?;
            emit(&csv, a.out.as_ref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Plotdata(a) => {
            emit(&plotdata::render(a.figure)?, a.out.as_ref(), out)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parse `argv` and run; returns the process exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
