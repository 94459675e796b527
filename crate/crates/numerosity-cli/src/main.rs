//! `numerosity` — exact counting, comparison, series inspection, congruence
//! construction, and the Euclid axiom harness for finitary point sets.
//!
//! Exit codes: 0 decided success, 2 honest `UNDECIDED` (so scripts can
//! detect oracle-dependence), 1 error. Diagnostics go to stderr only.

use std::error::Error;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use numerosity_cli::dsl;
use numerosity_cli::harness;
use numerosity_cli::oracle_by_name;
use numerosity_cli::output::{self, CountRow, Format};
use numerosity_core::axioms::{CheckConfig, Verdict};
use numerosity_core::combinatorics::FiniteSupport;
use numerosity_core::counting::CountingFunction;
use numerosity_core::numerosity::{build_congruence, Comparison, Numerosity};
use numerosity_core::series::{TruncatedSeries, TruncationWindow};

#[derive(Parser)]
#[command(
    name = "numerosity",
    version,
    about = "Euclidean numerosities of finitary point sets, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the counting sequence k, H_k, |X ∩ H_k| along a chain
    Count {
        /// Point-set expression, e.g. "N^2 \ diag(2)"
        expr: String,
        /// Chain of supports: `identity` or `perm:<comma list>`
        #[arg(long, default_value = "identity")]
        chain: String,
        /// Last chain index
        #[arg(long, default_value_t = 64, env = "NUMEROSITY_HORIZON")]
        horizon: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare two numerosities through an ultrafilter oracle
    Compare {
        expr_a: String,
        expr_b: String,
        /// Oracle name (`eventual-sign`)
        #[arg(long, default_value = "eventual-sign")]
        oracle: String,
        #[arg(long, default_value_t = 64, env = "NUMEROSITY_HORIZON")]
        horizon: usize,
        /// Stabilization window of the eventual-sign oracle
        #[arg(long, default_value_t = 16)]
        window: usize,
        #[arg(long, default_value = "identity")]
        chain: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Characteristic series of an expression on a finite window
    Series {
        expr: String,
        /// Window support, comma-separated: `--support 0,1,2`
        #[arg(long, value_delimiter = ',', required = true)]
        support: Vec<u64>,
        /// Per-variable degree cap (default: the certificate bound)
        #[arg(long)]
        degcap: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build an explicit layer-by-layer bijection between two restrictions
    Congruence {
        expr_a: String,
        expr_b: String,
        #[arg(long, default_value_t = 16, env = "NUMEROSITY_HORIZON")]
        horizon: usize,
        #[arg(long, default_value = "identity")]
        chain: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the Euclid axiom harness over a catalog of checks
    Axioms {
        /// Catalog JSON path (defaults to the built-in catalog)
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, default_value_t = 64, env = "NUMEROSITY_HORIZON")]
        horizon: usize,
        /// Stabilization window of the eventual-sign oracle
        #[arg(long, default_value_t = 16)]
        window: usize,
        #[arg(long, default_value = "eventual-sign")]
        oracle: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum Outcome {
    Decided,
    Undecided,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Decided) => ExitCode::SUCCESS,
        Ok(Outcome::Undecided) => ExitCode::from(2),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<Outcome, Box<dyn Error>> {
    match command {
        Command::Count {
            expr,
            chain,
            horizon,
            format,
        } => {
            let expr = dsl::parse_expr(&expr)?;
            let chain = dsl::parse_chain(&chain)?;
            let mut counting = CountingFunction::new(expr)?;
            let rows: Vec<CountRow> = (0..=horizon)
                .map(|k| {
                    let support = chain.support_at(k);
                    let count = counting.count(&support);
                    CountRow { k, support, count }
                })
                .collect();
            print!("{}", output::render_counts(&rows, format));
            Ok(Outcome::Decided)
        }
        Command::Compare {
            expr_a,
            expr_b,
            oracle,
            horizon,
            window,
            chain,
            format,
        } => {
            let a = dsl::parse_expr(&expr_a)?;
            let b = dsl::parse_expr(&expr_b)?;
            let chain = dsl::parse_chain(&chain)?;
            let oracle = oracle_by_name(&oracle, window)
                .ok_or_else(|| format!("unknown oracle `{oracle}`"))?;
            let na = Numerosity::of(&a, &chain, horizon)?;
            let nb = Numerosity::of(&b, &chain, horizon)?;
            let result = na.compare(&nb, oracle.as_ref())?;
            print!("{}", output::render_comparison(&result, format));
            Ok(if result.relation == Comparison::Undecided {
                Outcome::Undecided
            } else {
                Outcome::Decided
            })
        }
        Command::Series {
            expr,
            support,
            degcap,
            format,
        } => {
            let expr = dsl::parse_expr(&expr)?;
            let support = FiniteSupport::from_iter(support);
            let cap = degcap
                .unwrap_or_else(|| expr.bound(support.max_element().unwrap_or(0)).max(1));
            let window = TruncationWindow::new(support, cap)?;
            let series = TruncatedSeries::characteristic(&expr, window)?;
            let squarefree = series.squarefree();
            let characteristic = series.is_characteristic();
            let text = match format {
                Format::Text => format!(
                    "series: {series}\nsquarefree: {squarefree}\ncharacteristic: {characteristic}\n"
                ),
                Format::Csv => format!(
                    "series,squarefree,characteristic\n\"{series}\",\"{squarefree}\",{characteristic}\n"
                ),
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "series": series.to_string(),
                        "squarefree": squarefree.to_string(),
                        "characteristic": characteristic,
                    }))
                    .expect("valid json")
                ),
            };
            print!("{text}");
            Ok(Outcome::Decided)
        }
        Command::Congruence {
            expr_a,
            expr_b,
            horizon,
            chain,
            format,
        } => {
            let a = dsl::parse_expr(&expr_a)?;
            let b = dsl::parse_expr(&expr_b)?;
            let chain = dsl::parse_chain(&chain)?;
            let table = build_congruence(&a, &b, &chain, horizon)?;
            let pairs: Vec<(String, String)> = table
                .pairs()
                .iter()
                .map(|(from, to)| (from.to_string(), to.to_string()))
                .collect();
            print!("{}", output::render_congruence(&pairs, format));
            Ok(Outcome::Decided)
        }
        Command::Axioms {
            catalog,
            horizon,
            window,
            oracle,
            format,
        } => {
            let text = match &catalog {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
                None => harness::BUILTIN_CATALOG.to_string(),
            };
            let entries = harness::parse_catalog(&text)?;
            let oracle = oracle_by_name(&oracle, window)
                .ok_or_else(|| format!("unknown oracle `{oracle}`"))?;
            let config = CheckConfig {
                horizon,
                subset_max: harness::SUBSET_MAX,
                ..CheckConfig::default()
            };
            let reports = harness::run_catalog(&entries, oracle.as_ref(), &config)?;
            print!("{}", output::render_reports(&reports, format));
            let failed = reports
                .iter()
                .any(|r| matches!(r.verdict, Verdict::Fail(_)));
            if failed {
                return Err("harness reported failures".into());
            }
            let undecided = reports.iter().any(|r| r.verdict == Verdict::Undecided);
            Ok(if undecided {
                Outcome::Undecided
            } else {
                Outcome::Decided
            })
        }
    }
}
