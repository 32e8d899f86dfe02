use serde::{Deserialize, Serialize};

/// One named sub-check with an optional witness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Result of a verification routine. `anchor` names the mathematical
/// statement being checked.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub anchor: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            anchor: anchor.into(),
            passed: true,
            checks: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) -> bool {
        self.push(name, passed, None::<String>)
    }

    pub fn check_with(
        &mut self,
        name: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
    ) -> bool {
        self.push(name, passed, Some(detail))
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: Option<impl Into<String>>) -> bool {
        self.passed &= passed;
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.map(Into::into),
        });
        passed
    }

    /// Records an error as a failed check instead of aborting the report.
    pub fn fail(&mut self, name: impl Into<String>, err: impl std::fmt::Display) {
        self.push(name, false, Some(err.to_string()));
    }

    /// Appends the checks of `other` under a prefix.
    pub fn absorb(&mut self, other: Report) {
        for c in other.checks {
            self.passed &= c.passed;
            self.checks.push(Check {
                name: format!("{}/{}", other.name, c.name),
                ..c
            });
        }
        self.passed &= other.passed;
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Several reports with an overall status.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub passed: bool,
    pub reports: Vec<Report>,
}

impl Aggregate {
    pub fn new(reports: Vec<Report>) -> Self {
        Aggregate {
            passed: reports.iter().all(|r| r.passed),
            reports,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
