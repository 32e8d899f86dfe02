//! One line per acceptance criterion. Runs without the test harness so the
//! lines are always printed; exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use verlinde_core::ktheory::nullity_experiments;
use verlinde_core::report::Report;
use verlinde_core::suites::suite_tasks;
use verlinde_core::{Config, GroupId};

struct Outcome {
    passed: bool,
    summary: String,
}

// Runs the tasks of `suite` whose names start with one of `prefixes`.
fn run_tasks(suite: &str, prefixes: &[&str], cfg: &Config) -> Vec<Report> {
    suite_tasks(suite, None, cfg)
        .unwrap()
        .into_iter()
        .filter(|t| prefixes.iter().any(|p| t.name.starts_with(p)))
        .map(|t| t.run())
        .collect()
}

fn outcome(reports: &[Report], elapsed: Duration, limit: Duration) -> Outcome {
    let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
    let failed: Vec<String> = reports
        .iter()
        .flat_map(|r| r.failures().map(move |c| format!("{}/{}", r.name, c.name)))
        .collect();
    let ok = !reports.is_empty() && reports.iter().all(|r| r.passed) && elapsed <= limit;
    let mut summary = format!("{} reports, {checks} checks, {:.2?} (limit {limit:?})", reports.len(), elapsed);
    if !failed.is_empty() {
        summary.push_str(&format!("; failed: {}", failed.iter().take(5).cloned().collect::<Vec<_>>().join(", ")));
    }
    if elapsed > limit {
        summary.push_str("; over time");
    }
    Outcome { passed: ok, summary }
}

fn timed(limit: Duration, f: impl FnOnce() -> Vec<Report>) -> Outcome {
    let t = Instant::now();
    let r = f();
    outcome(&r, t.elapsed(), limit)
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn nullity_full() -> Vec<Report> {
    std::thread::scope(|s| {
        let h: Vec<_> = [GroupId::C2, GroupId::G2]
            .into_iter()
            .map(|g| s.spawn(move || nullity_experiments(g, 100, Config::default().seed).unwrap()))
            .collect();
        h.into_iter()
            .map(|h| {
                let table = h.join().unwrap();
                let mut r = table.to_report();
                let ks: std::collections::BTreeSet<i64> = table.rows.iter().map(|x| x.k).collect();
                r.check_with("all levels 1..=100 present", ks.len() == 100, format!("{} levels", ks.len()));
                r
            })
            .collect()
    })
}

fn main() {
    let cfg = Config::default();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("table fidelity", Box::new(|| timed(secs(1), || run_tasks("tables", &["tables"], &cfg)))),
        ("dual-oracle fusion", Box::new(|| timed(secs(30), || run_tasks("fusion", &["fusion "], &cfg)))),
        ("Gepner-Fuchs presentation", Box::new(|| timed(secs(300), || run_tasks("ideals", &["gepner "], &cfg)))),
        ("generation of I_k", Box::new(|| timed(secs(60), || run_tasks("ideals", &["generation "], &cfg)))),
        ("P_lambda splitting", Box::new(|| timed(secs(600), || run_tasks("tables", &["lemma9"], &cfg)))),
        ("psi machinery", Box::new(|| timed(secs(120), || run_tasks("psi", &["psi k="], &cfg)))),
        ("nullity sweeps k <= 100", Box::new(|| timed(secs(600), nullity_full))),
        (
            "Verlinde-ring identities and Riesz search",
            Box::new(|| {
                timed(secs(600), || run_tasks("identities", &["verlinde identities", "invertibility", "riesz"], &cfg))
            }),
        ),
        ("SES rank checks", Box::new(|| timed(secs(600), || run_tasks("identities", &["ses "], &cfg)))),
        ("S3 warm-up", Box::new(|| timed(secs(600), || run_tasks("identities", &["s3"], &cfg)))),
        (
            "numeric property suites",
            Box::new(|| {
                timed(secs(600), || {
                    let mut r = run_tasks("fusion", &["variety ", "spectral "], &cfg);
                    r.extend(run_tasks("tables", &["weyl character", "Q positivity"], &cfg));
                    r
                })
            }),
        ),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        println!("{} criterion {}: {name}: {}", if o.passed { "PASS" } else { "FAIL" }, i + 1, o.summary);
        if !o.passed {
            failed.push(i + 1);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
