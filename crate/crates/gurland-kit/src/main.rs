//! `gurland-kit` — CLI over the Gurland-ratio evaluators.
//!
//! Exit codes: 0 success, 2 usage or domain error, 3 degenerate point,
//! 4 I/O failure, 5 sweep invariant violation.

mod commands;
mod config;
mod format;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gurland_core::TruncationOrder;

use config::Config;
use sweep::{AxisSpec, OutputFormat, Scale, SweepSpec};

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or domain violation (exit 2).
    Usage(String),
    /// x = y beyond the degeneracy threshold (exit 3).
    Degenerate(String),
    /// File system failure (exit 4).
    Io(String),
    /// A sweep row violated a certified inequality (exit 5).
    Violation(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) => 2,
            Self::Degenerate(_) => 3,
            Self::Io(_) => 4,
            Self::Violation(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            Self::Usage(m) | Self::Degenerate(m) | Self::Io(m) | Self::Violation(m) => m,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "gurland-kit",
    version,
    about = "Evaluate Gurland's gamma-function ratio with certified error bounds"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Point report: G, G*, ln G* (direct + product enclosure), relation residual
    Eval {
        x: f64,
        y: f64,
        /// Weierstrass-product factors for the enclosure
        #[arg(long)]
        product_terms: Option<u32>,
    },
    /// Truncated expansion at order m with the two certified remainder bounds
    Expand {
        x: f64,
        y: f64,
        /// Truncation order (>= 2)
        #[arg(long)]
        m: Option<u32>,
    },
    /// Bilateral bounds h²ζ(2,1+A) <= ln G* <= h²ζ(2,1+sqrt(xy))
    Bounds { x: f64, y: f64 },
    /// Solve ln G* = h²ζ(2,1+t) for t in (sqrt(xy), (x+y)/2)
    Tsolve {
        x: f64,
        y: f64,
        /// Bisection tolerance, in (0, 1e-6]
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Grid sweep writing one record per point plus a summary
    Sweep {
        /// x axis as start:stop:steps
        #[arg(long, value_name = "A:B:N")]
        x_range: AxisSpec,
        /// y axis as start:stop:steps
        #[arg(long, value_name = "A:B:N")]
        y_range: AxisSpec,
        /// Grid spacing: linear | log
        #[arg(long)]
        scale: Option<Scale>,
        /// Comma-separated truncation orders, e.g. 2,3,10
        #[arg(long)]
        m: Option<String>,
        /// Output file path
        #[arg(long)]
        out: PathBuf,
        /// Output format: csv | jsonl
        #[arg(long)]
        format: Option<OutputFormat>,
        /// Comma-separated column subset (x, y, violation always kept)
        #[arg(long)]
        columns: Option<String>,
        #[arg(long)]
        product_terms: Option<u32>,
        /// Relative tolerance for the adaptive S_infinity sum
        #[arg(long)]
        rel_tol: Option<f64>,
        /// Bisection tolerance for the t column
        #[arg(long)]
        tol: Option<f64>,
    },
}

fn parse_orders(raw: &str) -> Result<Vec<TruncationOrder>, CliError> {
    raw.split(',')
        .map(|s| {
            let m: u32 = s
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad truncation order `{s}`")))?;
            TruncationOrder::new(m).map_err(|e| CliError::Usage(e.to_string()))
        })
        .collect()
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = Config::from_env()?;
    match cli.cmd {
        Cmd::Eval { x, y, product_terms } => {
            let terms = cfg.resolve(product_terms, "product_terms", ratio_default_terms())?;
            commands::eval(x, y, terms)
        }
        Cmd::Expand { x, y, m } => {
            let m = cfg.resolve(m, "m", 2)?;
            commands::expand(x, y, m)
        }
        Cmd::Bounds { x, y } => commands::bounds(x, y),
        Cmd::Tsolve { x, y, tol } => {
            let tol = cfg.resolve(tol, "tol", 1e-10)?;
            commands::tsolve(x, y, tol)
        }
        Cmd::Sweep {
            x_range,
            y_range,
            scale,
            m,
            out,
            format,
            columns,
            product_terms,
            rel_tol,
            tol,
        } => {
            let scale = cfg.resolve(scale, "scale", Scale::Linear)?;
            let fmt = cfg.resolve(format, "format", OutputFormat::Csv)?;
            let orders = match m {
                Some(raw) => parse_orders(&raw)?,
                None => match cfg.get_raw("m") {
                    Some(raw) => parse_orders(raw)?,
                    None => vec![TruncationOrder::new(2).expect("2 is a valid order")],
                },
            };
            let columns = columns.map(|raw| {
                raw.split(',')
                    .map(|c| c.trim().to_string())
                    .filter(|c| !c.is_empty())
                    .collect()
            });
            let spec = SweepSpec::new(
                x_range,
                y_range,
                scale,
                orders,
                columns,
                cfg.resolve(product_terms, "product_terms", ratio_default_terms())?,
                cfg.resolve(rel_tol, "rel_tol", 1e-12)?,
                cfg.resolve(tol, "tol", 1e-10)?,
            )?;
            let summary = sweep::run(&spec, &out, fmt)?;
            summary.print();
            if summary.violations > 0 {
                return Err(CliError::Violation(format!(
                    "{} row(s) violated a certified inequality",
                    summary.violations
                )));
            }
            Ok(())
        }
    }
}

fn ratio_default_terms() -> u32 {
    gurland_core::ratio::DEFAULT_PRODUCT_TERMS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
