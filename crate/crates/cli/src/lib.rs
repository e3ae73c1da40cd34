//! Command-line front end for `cayley-core`.
//!
//! The binary is a thin wrapper around [`run`], which returns the text to
//! print and the exit status instead of touching the process, so every
//! command can be tested in-process.

pub mod commands;
pub mod error;
pub mod expr;
pub mod render;
pub mod spec;
pub mod verify;

use cayley_core::rational::parse_rational;
use cayley_core::Rational;
use clap::{Parser, Subcommand};

pub use error::{CliError, Status};
pub use expr::{parse_element, ElementExpression, ParseError};

use commands::{Kind, UnitRequest, DEFAULT_TABLE_ORDERS};
use render::Format;
use verify::{RandomConfig, Suite};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub status: Status,
}

impl Output {
    pub fn success(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            status: Status::Success,
        }
    }

    pub fn failure(status: Status, stderr: String) -> Self {
        Output {
            stdout: String::new(),
            stderr,
            status,
        }
    }
}

fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text.trim()).ok_or_else(|| format!("not a rational number: {text:?}"))
}

#[derive(Debug, Parser)]
#[command(name = "cayley", version, about = "Cayley unitary elements in rational group algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Units built from z + z^-1 in cyclic groups with sigma(z) = -1.
    Table {
        /// Even orders, at least 4.
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_TABLE_ORDERS)]
        orders: Vec<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The Cayley unit of a skew element.
    Unit {
        /// C<n>, D4, Q8, S3 or file:<path>.
        #[arg(long)]
        group: String,
        /// `classical` or generator:sign pairs, e.g. x:-1,y:+1.
        #[arg(long, default_value = "classical")]
        orient: String,
        #[arg(long, value_enum)]
        kind: Kind,
        /// A group element for L1/L2/L3, any skew expression for `generic`.
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        /// Scale of the skew element (must be 1 for L3).
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = rational_arg)]
        q: Rational,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// A spanning set of the skew-symmetric elements.
    SkewBasis {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "classical")]
        orient: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Runs the built-in verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = RandomConfig::default().seed)]
        seed: u64,
        /// Cases per randomized check.
        #[arg(long, default_value_t = RandomConfig::default().cases)]
        cases: usize,
    },
    /// Inverts an element by exact elimination.
    Inverse {
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

pub fn execute(cli: &Cli) -> Output {
    let result = match &cli.command {
        Command::Table { orders, format } => commands::cmd_table(orders, *format),
        Command::Unit {
            group,
            orient,
            kind,
            element,
            q,
            format,
        } => commands::cmd_unit(&UnitRequest {
            group,
            orientation: orient,
            kind: *kind,
            element,
            q: q.clone(),
            format: *format,
        }),
        Command::SkewBasis {
            group,
            orient,
            format,
        } => commands::cmd_skew_basis(group, orient, *format),
        Command::Inverse {
            group,
            element,
            format,
        } => commands::cmd_inverse(group, element, *format),
        Command::Verify { suite, seed, cases } => {
            let checks = verify::run_suite(*suite, RandomConfig { seed: *seed, cases: *cases });
            let report = verify::render_report(&checks);
            let status = if checks.iter().all(|c| c.passed) {
                Status::Success
            } else {
                Status::VerificationFailed
            };
            Ok(Output {
                stdout: report,
                stderr: String::new(),
                status,
            })
        }
    };
    result.unwrap_or_else(|e| Output::failure(Status::InvalidInput, format!("error: {e}\n")))
}

/// Parses `args` (including the program name) and runs the command.
/// Usage errors exit with [`Status::InvalidInput`]; `--help` and `--version`
/// succeed.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Output::failure(Status::InvalidInput, text)
            } else {
                Output::success(text)
            }
        }
    }
}
