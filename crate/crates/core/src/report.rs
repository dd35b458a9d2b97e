//! Pass/fail certificates.
//!
//! Each check records what was expected, what was measured, and a short
//! claim identifier naming the property it certifies. The text form is one
//! line per check:
//!
//! ```text
//! CHECK <name> <claim> expected=<v> measured=<v> <PASS|FAIL>
//! ```

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub claim: String,
    pub expected: String,
    pub measured: String,
    pub pass: bool,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CHECK {} {} expected={} measured={} {}",
            self.name,
            self.claim,
            self.expected,
            self.measured,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

/// Append-only list of checks; passes iff every check passes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(
        &mut self,
        name: &str,
        claim: &str,
        expected: impl fmt::Display,
        measured: impl fmt::Display,
        pass: bool,
    ) {
        self.checks.push(Check {
            name: name.to_string(),
            claim: claim.to_string(),
            expected: token(&expected.to_string()),
            measured: token(&measured.to_string()),
            pass,
        });
    }

    /// Records an equality check.
    pub fn expect_eq<T: PartialEq + fmt::Display>(&mut self, name: &str, claim: &str, expected: T, measured: T) {
        let pass = expected == measured;
        self.push(name, claim, expected, measured, pass);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Values must stay single tokens in the line format.
fn token(s: &str) -> String {
    if s.is_empty() {
        "-".to_string()
    } else {
        s.split_whitespace().collect::<Vec<_>>().join("_")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_format() {
        let mut r = VerificationReport::new();
        r.expect_eq("size", "gs-size", 30, 30);
        r.push("min_distance", "gs-distance", 3, "2 words", false);
        let text = r.to_string();
        assert_eq!(
            text,
            "CHECK size gs-size expected=30 measured=30 PASS\nCHECK min_distance gs-distance expected=3 measured=2_words FAIL\n"
        );
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
    }
}
