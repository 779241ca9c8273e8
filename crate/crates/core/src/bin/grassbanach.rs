use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use grassbanach::check;
use grassbanach::expr::{self, OutputFormat, SessionConfig};
use grassbanach::{Error, OrderingFunction};

/// Evaluate expressions in Grassmann–Banach algebras.
#[derive(Parser)]
#[command(name = "grassbanach", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression, or one expression per line of stdin when EXPR is '-'.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// real | rational | padic=P[:PRECISION]
        #[arg(long, default_value = "rational")]
        field: String,
        /// l1 | linf (linf needs a p-adic field)
        #[arg(long, default_value = "l1")]
        norm: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// JSON ordering table: [{"set": [1, 2], "order": [2, 1]}, ...]
        #[arg(long)]
        ordering: Option<std::path::PathBuf>,
    },
    /// Run the built-in randomized property suite.
    Check {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn session(
    field: &str,
    norm: &str,
    format: Format,
    ordering: Option<&std::path::Path>,
) -> Result<SessionConfig, Error> {
    let ordering = match ordering {
        None => OrderingFunction::Canonical,
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidOrdering(format!("{}: {e}", path.display())))?;
            OrderingFunction::from_json(&text)?
        }
    };
    let output = match format {
        Format::Text => OutputFormat::Text,
        Format::Json => OutputFormat::Json,
    };
    SessionConfig::new(
        expr::parse_field(field)?,
        expr::parse_norm(norm)?,
        ordering,
        output,
    )
}

fn eval(expression: &str, cfg: &SessionConfig) -> Result<String, Error> {
    if expression != "-" {
        return expr::run(expression, cfg).map(|s| s + "\n");
    }
    let mut input = String::new();
    io::stdin()
        .read_to_string(&mut input)
        .map_err(|e| Error::Invariant(format!("reading stdin: {e}")))?;
    let mut out = String::new();
    for line in input.lines().filter(|l| !l.trim().is_empty()) {
        out += &expr::run(line, cfg)?;
        out.push('\n');
    }
    Ok(out)
}

fn fail(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(expr::exit_code(err) as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Eval {
            expr,
            field,
            norm,
            format,
            ordering,
        } => {
            let result = session(&field, &norm, format, ordering.as_deref())
                .and_then(|cfg| eval(&expr, &cfg));
            match result {
                Ok(out) => {
                    let _ = io::stdout().write_all(out.as_bytes());
                    ExitCode::SUCCESS
                }
                Err(e) => fail(&e),
            }
        }
        Command::Check { seed, cases } => {
            let outcomes = check::run_all(seed, cases);
            for o in &outcomes {
                println!("{o}");
            }
            if outcomes.iter().all(check::CheckOutcome::passed) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(5)
            }
        }
    }
}
