//! One PASS/FAIL line per acceptance criterion.

use std::process::ExitCode;
use std::time::Instant;

use blobtilt::report::{CheckReport, Status, Summary};
use blobtilt::verify::{criterion, VerifyConfig, CRITERIA};

fn detail(reports: &[CheckReport]) -> String {
    let s = Summary::of(reports);
    let mut d = format!("{} pass", s.pass);
    if s.report_only > 0 {
        let info: Vec<String> = reports
            .iter()
            .filter(|r| r.status == Status::ReportOnly)
            .map(|r| {
                let n = r.params.get("n").map(|v| v.to_string()).unwrap_or_default();
                format!("n={n}: {}", r.observed)
            })
            .collect();
        d.push_str(&format!(", report-only [{}]", info.join("; ")));
    }
    if s.skipped > 0 {
        d.push_str(&format!(", {} skipped", s.skipped));
    }
    d
}

fn main() -> ExitCode {
    let cfg = VerifyConfig::default();
    let mut failed = false;
    for (k, title) in CRITERIA.iter().enumerate() {
        let k = k + 1;
        let t = Instant::now();
        match criterion(k, &cfg) {
            Ok(reports) => {
                let bad: Vec<&CheckReport> = reports.iter().filter(|r| !r.passed()).collect();
                let ms = t.elapsed().as_millis();
                if bad.is_empty() && !reports.is_empty() {
                    println!("PASS {k:2} {title}: {} ({ms} ms)", detail(&reports));
                } else {
                    failed = true;
                    println!("FAIL {k:2} {title}: {} of {} checks failed ({ms} ms)", bad.len(), reports.len());
                    for r in bad {
                        println!("        {}", r.line());
                    }
                }
            }
            Err(e) => {
                failed = true;
                println!("FAIL {k:2} {title}: error: {e}");
            }
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
