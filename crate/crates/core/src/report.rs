//! Verification records.

use std::fmt::{self, Write as _};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// Outcome of one identity over one parameter range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub id: String,
    pub range: String,
    pub status: Status,
    /// Number of instances checked.
    pub checked: usize,
    /// Number of failing instances.
    pub failures: usize,
    /// The first (smallest) failing instance.
    pub witness: Option<String>,
}

impl Entry {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `id<TAB>range<TAB>status[<TAB>witness]`
    pub fn to_tsv_line(&self) -> String {
        let mut line = format!("{}\t{}\t{}", self.id, self.range, self.status);
        if let Some(w) = &self.witness {
            line.push('\t');
            line.push_str(&w.replace(['\t', '\n'], " "));
        }
        line
    }
}

/// Accumulates instance results into an [`Entry`], keeping the first witness.
///
/// Callers feed instances in ascending parameter order, so the kept witness
/// is the minimal counterexample.
#[derive(Debug)]
pub struct Check {
    id: String,
    range: String,
    checked: usize,
    failures: usize,
    witness: Option<String>,
}

impl Check {
    pub fn new(id: impl Into<String>, range: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            range: range.into(),
            checked: 0,
            failures: 0,
            witness: None,
        }
    }

    /// Records one instance; `witness` is only evaluated on failure.
    pub fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub fn expect_eq<T: PartialEq + fmt::Display>(
        &mut self,
        at: impl FnOnce() -> String,
        lhs: &T,
        rhs: &T,
    ) {
        let ok = lhs == rhs;
        self.expect(ok, || format!("{}: {} != {}", at(), lhs, rhs));
    }

    /// Records a failure that prevented the check from running at all.
    pub fn abort(&mut self, reason: impl Into<String>) {
        self.expect(false, || reason.into());
    }

    pub fn finish(self) -> Entry {
        let status = if self.failures == 0 {
            Status::Pass
        } else {
            Status::Fail
        };
        Entry {
            id: self.id,
            range: self.range,
            status,
            checked: self.checked,
            failures: self.failures,
            witness: self.witness,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub entries: Vec<Entry>,
}

impl VerificationReport {
    pub fn push(&mut self, entry: Entry) {
        self.entries.push(entry);
    }

    pub fn passed_count(&self) -> usize {
        self.entries.iter().filter(|e| e.passed()).count()
    }

    pub fn failed_count(&self) -> usize {
        self.entries.len() - self.passed_count()
    }

    pub fn all_passed(&self) -> bool {
        self.failed_count() == 0
    }

    pub fn entry(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&e.to_tsv_line());
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let width = self.entries.iter().map(|e| e.id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for e in &self.entries {
            let tag = if e.passed() { "PASS" } else { "FAIL" };
            let _ = write!(
                out,
                "[{tag}] {:<width$}  {}  ({} checked",
                e.id, e.range, e.checked
            );
            if e.failures > 0 {
                let _ = write!(out, ", {} failed", e.failures);
            }
            out.push(')');
            if let Some(w) = &e.witness {
                let _ = write!(out, "\n       first failure: {w}");
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{} identities checked: {} passed, {} failed",
            self.entries.len(),
            self.passed_count(),
            self.failed_count()
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_is_the_witness() {
        let mut c = Check::new("demo", "n=0..5");
        for n in 0..5 {
            c.expect(n < 2, || format!("n={n}"));
        }
        let e = c.finish();
        assert_eq!(e.status, Status::Fail);
        assert_eq!(e.failures, 3);
        assert_eq!(e.witness.as_deref(), Some("n=2"));
        assert_eq!(e.to_tsv_line(), "demo\tn=0..5\tfail\tn=2");
    }

    #[test]
    fn failure_counts_propagate() {
        let mut r = VerificationReport::default();
        r.push(Check::new("a", "-").finish());
        let mut c = Check::new("b", "-");
        c.expect_eq(|| "x".into(), &1, &2);
        r.push(c.finish());
        assert_eq!(r.failed_count(), 1);
        assert!(!r.all_passed());
        assert_eq!(r.to_tsv(), "a\t-\tpass\nb\t-\tfail\tx: 1 != 2\n");
        assert!(r.to_text().contains("1 passed, 1 failed"));
    }
}
