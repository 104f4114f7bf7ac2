use std::fmt::Write as _;

use serde::Serialize;
use su3coh::classify::{Table, TableSet};
use su3coh::VerificationReport;

pub fn markdown_table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| {} |", header.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(header.len()));
    for row in rows {
        let _ = writeln!(out, "| {} |", row.join(" | "));
    }
    out
}

fn csv_block(header: &[String], rows: &[Vec<String>]) -> Result<String, csv::Error> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header)?;
    for row in rows {
        writer.write_record(row)?;
    }
    let bytes = writer.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn table_grid(table: &Table, corner: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut header = vec![corner.to_string()];
    header.extend(table.col_labels.iter().cloned());
    let rows = table
        .row_labels
        .iter()
        .zip(&table.cells)
        .map(|(label, cells)| {
            let mut row = vec![label.clone()];
            row.extend(cells.iter().map(ToString::to_string));
            row
        })
        .collect();
    (header, rows)
}

pub fn tables_markdown(set: &TableSet) -> String {
    let mut out = String::new();
    for table in &set.tables {
        let _ = writeln!(out, "### {}: {}\n", table.table_id, table.title);
        if table.is_empty() {
            let _ = writeln!(out, "(empty for bound {})\n", set.bound);
            continue;
        }
        let corner = if table.table_id == "table1" {
            "stabilizer"
        } else {
            "M2 \\ M1"
        };
        let (header, rows) = table_grid(table, corner);
        out.push_str(&markdown_table(&header, &rows));
        if !table.named_examples.is_empty() {
            out.push('\n');
            for example in &table.named_examples {
                let _ = writeln!(
                    out,
                    "- ({}, {}): {}",
                    example.row, example.col, example.manifold
                );
            }
        }
        out.push('\n');
    }
    out
}

pub fn tables_csv(set: &TableSet) -> Result<String, csv::Error> {
    let mut blocks = Vec::new();
    for table in &set.tables {
        let (header, rows) = table_grid(table, &table.table_id);
        blocks.push(csv_block(&header, &rows)?);
    }
    Ok(blocks.join("\n"))
}

fn report_row(report: &VerificationReport) -> Vec<String> {
    vec![
        report.check_name.clone(),
        report.samples.to_string(),
        format!("{:.3e}", report.max_deviation),
        if report.passed { "pass" } else { "FAIL" }.to_string(),
        report.note.clone().unwrap_or_default(),
    ]
}

pub fn reports_markdown(seed: u64, reports: &[VerificationReport]) -> String {
    let header: Vec<String> = ["check", "samples", "max deviation", "result", "note"]
        .map(String::from)
        .to_vec();
    let rows: Vec<Vec<String>> = reports.iter().map(report_row).collect();
    format!("seed: {seed}\n\n{}", markdown_table(&header, &rows))
}

pub fn reports_csv(seed: u64, reports: &[VerificationReport]) -> Result<String, csv::Error> {
    let header: Vec<String> = [
        "seed",
        "check_name",
        "samples",
        "max_deviation",
        "passed",
        "note",
    ]
    .map(String::from)
    .to_vec();
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                seed.to_string(),
                r.check_name.clone(),
                r.samples.to_string(),
                format!("{:e}", r.max_deviation),
                r.passed.to_string(),
                r.note.clone().unwrap_or_default(),
            ]
        })
        .collect();
    csv_block(&header, &rows)
}

#[derive(Serialize)]
pub struct SeededReports<'a> {
    pub seed: u64,
    pub reports: &'a [VerificationReport],
}

/// Key/value records as a two-column markdown table, a one-row CSV, or JSON.
pub fn record_markdown(fields: &[(&str, String)]) -> String {
    let header = vec!["field".to_string(), "value".to_string()];
    let rows: Vec<Vec<String>> = fields
        .iter()
        .map(|(k, v)| vec![k.to_string(), v.clone()])
        .collect();
    markdown_table(&header, &rows)
}

pub fn record_csv(fields: &[(&str, String)]) -> Result<String, csv::Error> {
    let header: Vec<String> = fields.iter().map(|(k, _)| k.to_string()).collect();
    let row: Vec<String> = fields.iter().map(|(_, v)| v.clone()).collect();
    csv_block(&header, &[row])
}
