//! The axiom harness: parses a catalog of checks, runs each against the
//! core axiom module, and times it. Catalog entries are JSON objects
//! `{"check": "...", "args": [...]}`; set-valued arguments use the
//! expression DSL.
//!
//! The built-in catalog lives in `data/axioms.json` and is embedded in the
//! binary, so default reports are reproducible.

use std::time::Instant;

use numerosity_core::axioms::{self, AxiomReport, CheckConfig};
use numerosity_core::numerosity::UltrafilterOracle;
use thiserror::Error;

use crate::dsl;

/// The catalog shipped with the binary.
pub const BUILTIN_CATALOG: &str = include_str!("../data/axioms.json");

/// Exhaustive "every F" assertions enumerate all subsets of
/// `{0..SUBSET_MAX}`; comparisons use the full horizon separately.
pub const SUBSET_MAX: u64 = 8;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("catalog is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("catalog entry {index}: {msg}")]
    Entry { index: usize, msg: String },
    #[error("catalog entry {index} ({check}): {source}")]
    Check {
        index: usize,
        check: String,
        source: axioms::AxiomError,
    },
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub check: String,
    pub args: Vec<String>,
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, HarnessError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let array = value.as_array().ok_or(HarnessError::Entry {
        index: 0,
        msg: "catalog must be a JSON array".into(),
    })?;
    let mut entries = Vec::new();
    for (index, item) in array.iter().enumerate() {
        let check = item
            .get("check")
            .and_then(|v| v.as_str())
            .ok_or_else(|| HarnessError::Entry {
                index,
                msg: "missing string field `check`".into(),
            })?
            .to_string();
        let args = item
            .get("args")
            .and_then(|v| v.as_array())
            .ok_or_else(|| HarnessError::Entry {
                index,
                msg: "missing array field `args`".into(),
            })?
            .iter()
            .map(|v| {
                v.as_str().map(str::to_string).ok_or(HarnessError::Entry {
                    index,
                    msg: "`args` entries must be strings".into(),
                })
            })
            .collect::<Result<Vec<String>, _>>()?;
        entries.push(CatalogEntry { check, args });
    }
    Ok(entries)
}

fn entry_error(index: usize, msg: impl ToString) -> HarnessError {
    HarnessError::Entry {
        index,
        msg: msg.to_string(),
    }
}

fn arity(index: usize, entry: &CatalogEntry, n: usize) -> Result<(), HarnessError> {
    if entry.args.len() != n {
        return Err(entry_error(
            index,
            format!("{} expects {n} args, got {}", entry.check, entry.args.len()),
        ));
    }
    Ok(())
}

/// Runs every catalog entry, filling in wall-clock milliseconds. Reports
/// come back in catalog order.
pub fn run_catalog(
    entries: &[CatalogEntry],
    oracle: &dyn UltrafilterOracle,
    config: &CheckConfig,
) -> Result<Vec<AxiomReport>, HarnessError> {
    let mut reports = Vec::with_capacity(entries.len());
    for (index, entry) in entries.iter().enumerate() {
        let expr = |i: usize| {
            dsl::parse_expr(&entry.args[i]).map_err(|e| entry_error(index, e))
        };
        let int = |i: usize| {
            entry.args[i]
                .trim()
                .parse::<u64>()
                .map_err(|_| entry_error(index, format!("bad integer `{}`", entry.args[i])))
        };
        let started = Instant::now();
        let outcome = match entry.check.as_str() {
            "AP" => {
                arity(index, entry, 2)?;
                axioms::check_ap(&expr(0)?, &expr(1)?, oracle, config)
            }
            "SP" => {
                arity(index, entry, 4)?;
                axioms::check_sp(&expr(0)?, &expr(1)?, &expr(2)?, &expr(3)?, oracle, config)
            }
            "DP" => {
                arity(index, entry, 4)?;
                axioms::check_dp(&expr(0)?, &expr(1)?, &expr(2)?, &expr(3)?, oracle, config)
            }
            "UP" => {
                arity(index, entry, 2)?;
                axioms::check_up(&expr(0)?, int(1)?, oracle, config)
            }
            "TP" => {
                arity(index, entry, 2)?;
                let spec = dsl::parse_permutation_spec(&entry.args[1])
                    .map_err(|e| entry_error(index, e))?;
                axioms::check_tp_np(&expr(0)?, &spec, config)
            }
            "PP" => {
                arity(index, entry, 4)?;
                axioms::check_pp(&expr(0)?, &expr(1)?, &expr(2)?, &expr(3)?, oracle, config)
            }
            "FIN" => {
                arity(index, entry, 1)?;
                axioms::check_finite_agreement(int(0)? as usize, 0x5eed, oracle, config)
            }
            "COPY" => {
                arity(index, entry, 6)?;
                axioms::check_copy(
                    &expr(0)?,
                    int(1)?,
                    int(2)? as u32,
                    int(3)?,
                    int(4)? as u32,
                    int(5)? as u32,
                    oracle,
                    config,
                )
            }
            other => {
                return Err(entry_error(index, format!("unknown check `{other}`")));
            }
        };
        let mut report = outcome.map_err(|source| HarnessError::Check {
            index,
            check: entry.check.clone(),
            source,
        })?;
        report.millis = started.elapsed().as_millis() as u64;
        reports.push(report);
    }
    Ok(reports)
}
