use std::process::ExitCode;

use verlinde_core::report::Aggregate;
use verlinde_core::Error;

use crate::Format;

/// Why a command did not succeed, and how to exit.
pub enum Failure {
    /// Bad flags or arguments: exit 2.
    Usage(String),
    /// Computation finished but a check failed; the payload goes to stdout.
    Checks(String),
    /// Computation aborted.
    Runtime(Error),
}

impl Failure {
    pub fn usage(m: String) -> Self {
        Failure::Usage(m)
    }

    pub fn report(self) -> ExitCode {
        match self {
            Failure::Usage(m) => {
                eprintln!("error: {m}");
                ExitCode::from(2)
            }
            Failure::Checks(s) => {
                print!("{s}");
                ExitCode::from(1)
            }
            Failure::Runtime(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::RankMismatch { .. } | Error::NotDominant { .. } | Error::Unsupported(_) => {
                Failure::Usage(e.to_string())
            }
            e => Failure::Runtime(e),
        }
    }
}

pub fn json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serializes");
    s.push('\n');
    s
}

/// Prints an aggregate as JSON or one line per report; failing checks are
/// listed under their report in text mode.
pub fn emit_report(agg: Aggregate, f: Format) -> Result<String, Failure> {
    let s = match f {
        Format::Json => agg.to_json() + "\n",
        Format::Text => {
            let mut s = String::new();
            for r in &agg.reports {
                let n = r.checks.len();
                let bad = r.failures().count();
                s.push_str(&format!(
                    "{} {} ({}/{} checks)\n",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    n - bad,
                    n
                ));
                for c in r.failures() {
                    match &c.detail {
                        Some(d) => s.push_str(&format!("  failed {}: {d}\n", c.name)),
                        None => s.push_str(&format!("  failed {}\n", c.name)),
                    }
                }
            }
            s
        }
        _ => return Err(Failure::Usage(format!("--format {f:?} is not supported for reports").to_lowercase())),
    };
    if agg.passed {
        Ok(s)
    } else {
        Err(Failure::Checks(s))
    }
}
