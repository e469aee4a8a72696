use blobtilt::mult::MultiplicityTable;
use blobtilt::report::{CheckReport, Summary};
use serde_json::{json, Value};

use crate::Format;

fn compact(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn text(reports: &[CheckReport], summary: &Summary) -> String {
    let mut s: String = reports.iter().map(|r| r.line() + "\n").collect();
    s.push_str(&format!(
        "summary: {} pass, {} fail, {} report-only",
        summary.pass, summary.fail, summary.report_only
    ));
    if summary.skipped > 0 {
        s.push_str(&format!(", {} skipped", summary.skipped));
    }
    s.push('\n');
    s
}

fn checks_csv(reports: &[CheckReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["name", "params", "status", "expected", "observed", "source", "note"])
        .expect("in-memory write");
    for r in reports {
        let status = serde_json::to_value(r.status).expect("status");
        let source = serde_json::to_value(r.source).expect("source");
        w.write_record([
            r.name.clone(),
            serde_json::to_string(&r.params).expect("params"),
            compact(&status),
            compact(&r.expected),
            compact(&r.observed),
            compact(&source),
            r.note.clone().unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

/// Text lines, the JSON envelope, or CSV (the table itself for `tables`).
pub fn render(
    format: Format,
    config: &Value,
    reports: &[CheckReport],
    summary: &Summary,
    table: Option<&MultiplicityTable>,
) -> String {
    match format {
        Format::Text => text(reports, summary),
        Format::Json => {
            let mut doc = json!({"config": config, "checks": reports, "summary": summary});
            if let Some(t) = table {
                doc["table"] = t.to_json();
            }
            serde_json::to_string_pretty(&doc).expect("json") + "\n"
        }
        Format::Csv => match table {
            Some(t) => t.to_csv(),
            None => checks_csv(reports),
        },
    }
}
