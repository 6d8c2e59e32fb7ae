//! Verification reports: per-case pass/fail records with enough context to
//! reproduce a failure.  Serialization is deterministic for a fixed
//! configuration and seed; wall-clock data is deliberately left out so that
//! reports are byte-identical across runs.

use serde::Serialize;

/// One checked identity instance.
#[derive(Serialize, Clone, Debug)]
pub struct CaseRecord {
    /// Human-readable case key, e.g. `lambda=(2,1) nu=(1)`.
    pub case: String,
    pub pass: bool,
    /// On failure: both sides in canonical text form.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CaseRecord {
    pub fn pass(case: impl Into<String>) -> Self {
        CaseRecord { case: case.into(), pass: true, detail: None }
    }

    pub fn fail(case: impl Into<String>, detail: impl Into<String>) -> Self {
        CaseRecord { case: case.into(), pass: false, detail: Some(detail.into()) }
    }

    pub fn check(case: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(case)
        } else {
            Self::fail(case, detail())
        }
    }
}

/// The outcome of one named suite over one parameter grid.
#[derive(Serialize, Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub m: usize,
    pub n: usize,
    pub max_size: usize,
    pub seed: u64,
    /// Sampled generic parameter points, echoed for reproducibility.
    pub points: Vec<String>,
    pub cases: Vec<CaseRecord>,
    pub passed: usize,
    pub failed: usize,
    pub status: String,
}

impl SuiteReport {
    pub fn new(suite: &str, m: usize, n: usize, max_size: usize, seed: u64) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            m,
            n,
            max_size,
            seed,
            points: Vec::new(),
            cases: Vec::new(),
            passed: 0,
            failed: 0,
            status: "pass".to_string(),
        }
    }

    pub fn extend(&mut self, cases: Vec<CaseRecord>) {
        for case in cases {
            self.push(case);
        }
    }

    pub fn push(&mut self, case: CaseRecord) {
        if case.pass {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.status = "fail".to_string();
        }
        self.cases.push(case);
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// One-line-per-case plain text rendering.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "suite {} (m={}, n={}, max-size={}, seed={}): {} passed, {} failed\n",
            self.suite, self.m, self.n, self.max_size, self.seed, self.passed, self.failed
        );
        for p in &self.points {
            out.push_str(&format!("  point {p}\n"));
        }
        for case in &self.cases {
            out.push_str(&format!(
                "  [{}] {}\n",
                if case.pass { "ok" } else { "FAIL" },
                case.case
            ));
            if let Some(detail) = &case.detail {
                for line in detail.lines() {
                    out.push_str(&format!("         {line}\n"));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_status() {
        let mut report = SuiteReport::new("demo", 1, 1, 4, 7);
        report.push(CaseRecord::pass("a"));
        report.push(CaseRecord::fail("b", "lhs = 1\nrhs = 2"));
        assert_eq!(report.passed, 1);
        assert_eq!(report.failed, 1);
        assert_eq!(report.status, "fail");
        assert!(!report.all_passed());
        let text = report.to_text();
        assert!(text.contains("[ok] a"));
        assert!(text.contains("[FAIL] b"));
        assert!(text.contains("rhs = 2"));
    }

    #[test]
    fn json_is_deterministic_and_skips_empty_detail() {
        let mut report = SuiteReport::new("demo", 2, 1, 3, 42);
        report.push(CaseRecord::pass("case"));
        let a = report.to_json();
        let b = report.to_json();
        assert_eq!(a, b);
        assert!(!a.contains("detail"));
        assert!(a.contains("\"seed\": 42"));
    }
}
