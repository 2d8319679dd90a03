use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qderange::format::{render, OutputFormat};
use qderange::sweep::{self, Check};
use qderange::{bench, resolve_oracle_cap, CliError};
use qderange_core::{generate, MethodTag};

#[derive(Parser, Debug)]
#[command(name = "qderange")]
#[command(about = "Exact q-derangement polynomials and checks of their coefficient structure")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the coefficient table of d_n(q)
    Compute {
        #[arg(long)]
        n: u32,
        /// recursive, wachs, oracle or coeff-recurrence
        #[arg(long, default_value = "recursive", value_parser = parse_method)]
        method: MethodTag,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Largest n the oracle will enumerate (overrides QDERANGE_ORACLE_CAP)
        #[arg(long)]
        oracle_cap: Option<u32>,
    },
    /// Run property checks for every n in a range
    Verify {
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        /// Comma-separated subset; defaults to all checks
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Vec<Check>,
        /// Largest n cross-checked against the oracle (overrides QDERANGE_ORACLE_CAP)
        #[arg(long)]
        oracle_cap: Option<u32>,
    },
    /// Time a generator on a doubling schedule of n up to --n-max
    Bench {
        #[arg(long)]
        n_max: u32,
        #[arg(long, default_value = "recursive", value_parser = parse_method)]
        method: MethodTag,
    },
}

fn parse_method(s: &str) -> Result<MethodTag, String> {
    s.parse().map_err(|e: qderange_core::Error| e.to_string())
}

fn run(args: Args) -> Result<u8, CliError> {
    match args.command {
        Command::Compute {
            n,
            method,
            format,
            oracle_cap,
        } => {
            let cap = resolve_oracle_cap(oracle_cap)?;
            let seq = generate(n, method, cap)?;
            print!("{}", render(&seq, method, format));
            Ok(0)
        }
        Command::Verify {
            from,
            to,
            checks,
            oracle_cap,
        } => {
            if from > to {
                return Err(CliError::Usage(format!("--from {from} exceeds --to {to}")));
            }
            let cap = resolve_oracle_cap(oracle_cap)?;
            let checks = if checks.is_empty() {
                Check::ALL.to_vec()
            } else {
                checks
            };
            let report = sweep::run(from, to, &checks, cap);
            print!("{report}");
            Ok(report.status().exit_code())
        }
        Command::Bench { n_max, method } => {
            let report = bench::run(n_max, method)?;
            print!("{report}");
            Ok(if report.agree_at_max { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
