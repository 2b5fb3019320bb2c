use std::fmt;
use std::io::IsTerminal;

use serde_json::{json, Value};

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Provenance {
    /// Stated in the literature.
    Literature,
    /// Computed independently from the definitions.
    Derived,
    /// Immediate from the definitions.
    Trivial,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Literature => "literature",
            Provenance::Derived => "derived",
            Provenance::Trivial => "trivial",
        })
    }
}

/// One named comparison. `pass` is exact string equality of the canonical
/// renderings of `expected` and `computed` unless built with [`CheckReport::verdict`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub inputs: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub provenance: Provenance,
}

impl CheckReport {
    pub fn new(
        name: impl Into<String>,
        inputs: impl Into<String>,
        expected: impl fmt::Display,
        computed: impl fmt::Display,
        provenance: Provenance,
    ) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        CheckReport {
            name: name.into(),
            inputs: inputs.into(),
            pass: expected == computed,
            expected,
            computed,
            provenance,
        }
    }

    /// For checks whose outcome is a predicate rather than an equality.
    pub fn verdict(
        name: impl Into<String>,
        inputs: impl Into<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
        pass: bool,
        provenance: Provenance,
    ) -> Self {
        CheckReport {
            name: name.into(),
            inputs: inputs.into(),
            expected: expected.into(),
            computed: computed.into(),
            pass,
            provenance,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "inputs": self.inputs,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.pass,
            "provenance": self.provenance.to_string(),
        })
    }
}

/// Whether to emit ANSI colour: only to a terminal, and never with `NO_COLOR` set.
pub fn use_color() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stdout().is_terminal()
}

pub fn status(pass: bool, color: bool) -> &'static str {
    match (pass, color) {
        (true, false) => "PASS",
        (false, false) => "FAIL",
        (true, true) => "\x1b[32mPASS\x1b[0m",
        (false, true) => "\x1b[31mFAIL\x1b[0m",
    }
}

/// One line per report: status, name, then `computed` (and `expected` on failure).
pub fn render_text(reports: &[CheckReport], color: bool) -> String {
    let width = reports.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!("{} {:width$}  {}", status(r.pass, color), r.name, r.computed));
        if !r.pass {
            out.push_str(&format!("  (expected {})", r.expected));
        }
        out.push('\n');
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    out.push_str(&format!(
        "{} check{}, {} passed, {} failed\n",
        reports.len(),
        if reports.len() == 1 { "" } else { "s" },
        reports.len() - failed,
        failed
    ));
    out
}

pub fn render_json(reports: &[CheckReport]) -> Value {
    Value::Array(reports.iter().map(CheckReport::to_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equality_decides_pass() {
        let r = CheckReport::new("hh0", "x", 118, 118, Provenance::Literature);
        assert!(r.pass);
        let r = CheckReport::new("hh0", "x", 118, "118 ", Provenance::Literature);
        assert!(!r.pass);
    }

    #[test]
    fn text_rendering() {
        let reports = vec![
            CheckReport::new("a", "", 1, 1, Provenance::Trivial),
            CheckReport::new("long name", "", 2, 3, Provenance::Derived),
        ];
        let text = render_text(&reports, false);
        assert_eq!(
            text,
            "PASS a          1\nFAIL long name  3  (expected 2)\n2 checks, 1 passed, 1 failed\n"
        );
    }

    #[test]
    fn json_keys() {
        let r = CheckReport::new("a", "in", 1, 1, Provenance::Derived);
        assert_eq!(
            r.to_json().to_string(),
            r#"{"computed":"1","expected":"1","inputs":"in","name":"a","pass":true,"provenance":"derived"}"#
        );
    }
}
