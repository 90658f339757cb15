//! Command-line surface: argument parsing and dispatch to [`crate::commands`].

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::commands::{self, parse_bbox, parse_query_lines, Outcome};
use crate::error::{CliError, CliResult, EXIT_GAP_SAFE, EXIT_INVALID_INPUT};
use crate::problem::{BaseUtility, FixtureName, Problem};

#[derive(Debug, Parser)]
#[command(
    name = "monoext",
    version,
    about = "Decide, explain, and evaluate strictly increasing extensions of partial utilities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report weak/strict increase and gap-safety; exit 0 iff extendable.
    Check(ProblemArgs),
    /// Evaluate the extension at query points.
    Extend {
        #[command(flatten)]
        problem: ProblemArgs,
        #[command(flatten)]
        queries: QueryArgs,
    },
    /// Show contour bounds and region labels at query points.
    Regions {
        #[command(flatten)]
        problem: ProblemArgs,
        #[command(flatten)]
        queries: QueryArgs,
    },
    /// Export the extension on a 2-D grid as CSV.
    Grid {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Box corners x1,y1,x2,y2.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_bbox)]
        bbox: [f64; 4],
        /// Grid points per axis.
        #[arg(long, default_value_t = 50)]
        resolution: usize,
        /// Output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct ProblemArgs {
    /// Problem file (TOML).
    pub file: Option<PathBuf>,
    /// Use a bundled analytic fixture: example-gap or example-nin.
    #[arg(long, conflicts_with = "file")]
    pub fixture: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// chain, sum, or weighted:w1,w2,...
    #[arg(long)]
    pub base_utility: Option<String>,
}

#[derive(Debug, Args)]
pub struct QueryArgs {
    /// File with one query per line; `#` starts a comment.
    #[arg(long)]
    pub queries: Option<PathBuf>,
    /// Inline query; repeatable. Points are comma-separated coordinates.
    #[arg(short = 'q', long = "query", allow_hyphen_values = true)]
    pub query: Vec<String>,
}

impl ProblemArgs {
    pub fn load(&self) -> CliResult<Problem> {
        let problem = match (&self.fixture, &self.file) {
            (Some(name), _) => {
                Problem::fixture(name.parse::<FixtureName>().map_err(CliError::Usage)?)
            }
            (None, Some(path)) => Problem::load(path)?,
            (None, None) => {
                return Err(CliError::Usage("give a problem file or --fixture".into()));
            }
        };
        let base = self
            .base_utility
            .as_deref()
            .map(|s| s.parse::<BaseUtility>().map_err(CliError::Usage))
            .transpose()?;
        problem.with_overrides(self.alpha, self.beta, base)
    }
}

impl QueryArgs {
    pub fn collect(&self) -> CliResult<Vec<String>> {
        let mut out = Vec::new();
        if let Some(path) = &self.queries {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            out.extend(parse_query_lines(&text));
        }
        out.extend(self.query.iter().cloned());
        Ok(out)
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

fn execute(cli: &Cli, stdout: &mut Vec<u8>) -> CliResult<Outcome> {
    match &cli.command {
        Command::Check(p) => commands::check(&p.load()?),
        Command::Extend { problem, queries } => {
            commands::extend(&problem.load()?, &queries.collect()?)
        }
        Command::Regions { problem, queries } => {
            commands::regions(&problem.load()?, &queries.collect()?)
        }
        Command::Grid {
            problem,
            bbox,
            resolution,
            out,
        } => {
            let problem = problem.load()?;
            match out {
                None => commands::grid(&problem, *bbox, *resolution, stdout),
                Some(path) => {
                    let mut buf = Vec::new();
                    let outcome = commands::grid(&problem, *bbox, *resolution, &mut buf)?;
                    if outcome.code == EXIT_GAP_SAFE {
                        std::fs::write(path, buf).map_err(|e| CliError::Io {
                            path: path.display().to_string(),
                            message: e.to_string(),
                        })?;
                    }
                    Ok(outcome)
                }
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Execution {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_INVALID_INPUT,
                }
            } else {
                Execution {
                    stdout: text,
                    stderr: String::new(),
                    code: EXIT_GAP_SAFE,
                }
            };
        }
    };
    let mut csv = Vec::new();
    match execute(&cli, &mut csv) {
        Ok(outcome) => {
            let grid_to_stdout = !csv.is_empty();
            let mut stdout = String::from_utf8(csv).expect("CSV output is UTF-8");
            let mut stderr = String::new();
            if grid_to_stdout {
                stderr = outcome.report;
            } else {
                stdout.push_str(&outcome.report);
            }
            Execution {
                stdout,
                stderr,
                code: outcome.code,
            }
        }
        Err(e) => Execution {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}

/// Entry point for the binary.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let ex = run(args);
    let _ = std::io::stdout().write_all(ex.stdout.as_bytes());
    let _ = std::io::stderr().write_all(ex.stderr.as_bytes());
    ex.code
}
