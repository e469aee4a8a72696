//! Check results shared by the library suites and the command-line driver.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Data for an open question; never a verdict.
    ReportOnly,
    /// Not run, with the reason in `note`.
    Skipped,
}

/// Where the expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// A value printed in the literature.
    PaperTable,
    /// An integer recursion.
    Recursion,
    /// A rank certificate at a specialization.
    Certificate,
    /// An exact algebraic identity checked entrywise.
    Identity,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub expected: Value,
    pub observed: Value,
    pub source: Source,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Milliseconds; left out of JSON unless timings are requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, source: Source) -> Self {
        CheckReport {
            name: name.into(),
            params: BTreeMap::new(),
            status: Status::Pass,
            expected: Value::Null,
            observed: Value::Null,
            source,
            note: None,
            wall_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params.insert(key.to_string(), to_value(value));
        self
    }

    pub fn expected(mut self, value: impl Serialize) -> Self {
        self.expected = to_value(value);
        self
    }

    pub fn observed(mut self, value: impl Serialize) -> Self {
        self.observed = to_value(value);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn pass_if(mut self, ok: bool) -> Self {
        self.status = if ok { Status::Pass } else { Status::Fail };
        self
    }

    /// Pass iff observed equals expected.
    pub fn compare(self) -> Self {
        let ok = self.expected == self.observed;
        self.pass_if(ok)
    }

    pub fn report_only(mut self) -> Self {
        self.status = Status::ReportOnly;
        self
    }

    pub fn skipped(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Skipped;
        self.note = Some(reason.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// One-line human summary.
    pub fn line(&self) -> String {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ReportOnly => "INFO",
            Status::Skipped => "SKIP",
        };
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={}", compact(v))).collect();
        let mut s = format!("[{tag}] {}", self.name);
        if !params.is_empty() {
            s.push_str(&format!(" ({})", params.join(", ")));
        }
        if self.status == Status::ReportOnly || !self.expected.is_null() || !self.observed.is_null() {
            s.push_str(&format!(": observed {}", compact(&self.observed)));
            if !self.expected.is_null() {
                s.push_str(&format!(", expected {}", compact(&self.expected)));
            }
        }
        if let Some(n) = &self.note {
            s.push_str(&format!(" [{n}]"));
        }
        if let Some(ms) = self.wall_ms {
            s.push_str(&format!(" {ms}ms"));
        }
        s
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("serializable report value")
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub report_only: usize,
    #[serde(skip_serializing_if = "is_zero")]
    pub skipped: usize,
}

fn is_zero(k: &usize) -> bool {
    *k == 0
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::ReportOnly => s.report_only += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.fail == 0
    }
}

/// Sort by name, then by parameters, for deterministic output.
pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by(|a, b| {
        a.name
            .cmp(&b.name)
            .then_with(|| serde_json::to_string(&a.params).unwrap().cmp(&serde_json::to_string(&b.params).unwrap()))
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_counts_and_serialization() {
        let reports = vec![
            CheckReport::new("a", Source::Recursion).expected(2).observed(2).compare(),
            CheckReport::new("b", Source::Recursion).expected(2).observed(3).compare(),
            CheckReport::new("c", Source::Certificate).observed(5).report_only(),
        ];
        let s = Summary::of(&reports);
        assert_eq!((s.pass, s.fail, s.report_only), (1, 1, 1));
        assert!(!s.all_passed());
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"pass":1,"fail":1,"report_only":1}"#);
        let js = serde_json::to_value(&reports[2]).unwrap();
        assert_eq!(js["status"], "report_only");
        assert_eq!(js["source"], "certificate");
        assert!(js.get("wall_ms").is_none());
    }

    #[test]
    fn report_only_never_fails() {
        assert!(CheckReport::new("x", Source::Certificate).report_only().passed());
        assert!(CheckReport::new("x", Source::Certificate).skipped("why").passed());
        let line = CheckReport::new("rank", Source::Certificate)
            .param("n", 3)
            .expected(12)
            .observed(12)
            .compare()
            .line();
        assert_eq!(line, "[PASS] rank (n=3): observed 12, expected 12");
    }
}
