//! Rendering of command results as text, CSV, or JSON.
//!
//! Counting rows follow the `k,H_k,count` CSV schema with supports printed
//! as brace-wrapped space-separated lists, `{0 1 2}`. Axiom reports follow
//! the `{axiom, operands, verdict, witness, millis}` schema.

use numerosity_core::axioms::{AxiomReport, Verdict};
use numerosity_core::combinatorics::FiniteSupport;
use numerosity_core::numerosity::CompareResult;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

pub struct CountRow {
    pub k: usize,
    pub support: FiniteSupport,
    pub count: u64,
}

pub fn render_counts(rows: &[CountRow], format: Format) -> String {
    match format {
        // the counting interface is CSV-shaped; plain text shows the same rows
        Format::Text | Format::Csv => {
            let mut out = String::from("k,H_k,count\n");
            for row in rows {
                out.push_str(&format!("{},{},{}\n", row.k, row.support, row.count));
            }
            out
        }
        Format::Json => {
            let array: Vec<Value> = rows
                .iter()
                .map(|row| {
                    json!({
                        "k": row.k,
                        "support": row.support.to_string(),
                        "count": row.count,
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&array).expect("valid json"))
        }
    }
}

pub fn render_comparison(result: &CompareResult, format: Format) -> String {
    match format {
        Format::Text => match result.tail {
            Some(tail) => format!("{} tail={}\n", result.relation, tail),
            None => format!("{}\n", result.relation),
        },
        Format::Csv => {
            let tail = result
                .tail
                .map(|t| t.to_string())
                .unwrap_or_default();
            format!("relation,tail\n{},{}\n", result.relation, tail)
        }
        Format::Json => {
            let value = json!({
                "relation": result.relation.to_string(),
                "tail": result.tail,
            });
            format!("{}\n", serde_json::to_string_pretty(&value).expect("valid json"))
        }
    }
}

fn verdict_fields(verdict: &Verdict) -> (&'static str, Option<String>) {
    match verdict {
        Verdict::Pass => ("pass", None),
        Verdict::Fail(witness) => ("fail", Some(witness.to_string())),
        Verdict::Undecided => ("undecided", None),
    }
}

pub fn report_json(report: &AxiomReport) -> Value {
    let (verdict, witness) = verdict_fields(&report.verdict);
    json!({
        "axiom": report.axiom,
        "operands": report.operands,
        "verdict": verdict,
        "witness": witness,
        "millis": report.millis,
    })
}

pub fn render_reports(reports: &[AxiomReport], format: Format) -> String {
    match format {
        Format::Json => {
            let array: Vec<Value> = reports.iter().map(report_json).collect();
            format!("{}\n", serde_json::to_string_pretty(&array).expect("valid json"))
        }
        Format::Text | Format::Csv => {
            let mut rows: Vec<[String; 5]> = vec![[
                "axiom".into(),
                "operands".into(),
                "verdict".into(),
                "witness".into(),
                "millis".into(),
            ]];
            for report in reports {
                let (verdict, witness) = verdict_fields(&report.verdict);
                rows.push([
                    report.axiom.to_string(),
                    report.operands.join("; "),
                    verdict.to_string(),
                    witness.unwrap_or_default(),
                    report.millis.to_string(),
                ]);
            }
            if format == Format::Csv {
                return rows
                    .iter()
                    .map(|r| r.join(","))
                    .collect::<Vec<_>>()
                    .join("\n")
                    + "\n";
            }
            let mut widths = [0usize; 5];
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let mut out = String::new();
            for row in &rows {
                let mut line = String::new();
                for (w, cell) in widths.iter().zip(row) {
                    line.push_str(&format!("{cell:<w$}  "));
                }
                out.push_str(line.trim_end());
                out.push('\n');
            }
            out
        }
    }
}

pub fn render_congruence(pairs: &[(String, String)], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for (from, to) in pairs {
                out.push_str(&format!("{from} -> {to}\n"));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("from,to\n");
            for (from, to) in pairs {
                out.push_str(&format!("\"{from}\",\"{to}\"\n"));
            }
            out
        }
        Format::Json => {
            let array: Vec<Value> = pairs
                .iter()
                .map(|(from, to)| json!({"from": from, "to": to}))
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&array).expect("valid json"))
        }
    }
}
