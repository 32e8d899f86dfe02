//! Named groups of verification tasks. Each task is independent, so a
//! caller may run them in any order or concurrently and reassemble the
//! reports by position.

use crate::charpoly::{
    lemma6_support_check, lemma9_check, lemma_n_check, p_recursion_check, q_positivity_check, verify_tables,
    weyl_character_residual,
};
use crate::config::Config;
use crate::error::Result;
use crate::fusion::{dual_oracle_check, enumerate_simples, spectral_check};
use crate::ideals::{fusion_variety_check, verify_gepner_fuchs, verify_lemma_generation};
use crate::ktheory::{
    invertibility_checks, nullity_experiments, riesz_counterexample_search, s3_example_check, ses_rank_checks,
    verify_psi, verify_quotient_theorem, verlinde_identities_check,
};
use crate::lie::{GroupId, Weight};
use crate::report::Report;

pub const SUITES: [&str; 6] = ["tables", "fusion", "ideals", "psi", "identities", "experiments-small"];

type Job = Box<dyn Fn() -> Report + Send + Sync>;

/// One unit of work inside a suite.
pub struct Task {
    pub name: String,
    job: Job,
}

impl Task {
    fn new(name: impl Into<String>, f: impl Fn() -> Result<Report> + Send + Sync + 'static) -> Self {
        let name = name.into();
        let label = name.clone();
        Task {
            name,
            job: Box::new(move || {
                f().unwrap_or_else(|e| {
                    let mut r = Report::new(label.clone(), "error");
                    r.fail("run", e);
                    r
                })
            }),
        }
    }

    pub fn run(&self) -> Report {
        (self.job)()
    }
}

fn charpoly_lemmas() -> Result<Report> {
    let mut r = Report::new("charpoly lemmas", "P recursion, support of Q_lambda and the SU(2) boundary values, |lambda| <= 12");
    for w in enumerate_simples(GroupId::A2, 12) {
        if w.coords() != [0, 0] {
            r.check(format!("recursion {w}"), p_recursion_check(&w)?);
        }
        r.check(format!("support {w}"), lemma6_support_check(&w)?);
        r.check(format!("boundary {w}"), lemma_n_check(&w)?);
    }
    Ok(r)
}

fn lemma9_all() -> Result<Report> {
    let mut r = Report::new("lemma9", "SU(3) splitting of P_lambda into A_j(s) and B_j(t), |lambda| <= 12");
    for w in enumerate_simples(GroupId::A2, 12) {
        r.absorb(lemma9_check(&w)?);
    }
    Ok(r)
}

fn weyl_all(cfg: &Config) -> Result<Report> {
    let mut r = Report::new("weyl character", "Q_(n-1,m-1) equals the Weyl quotient on the torus, n, m <= 8");
    for n in 1..=8 {
        for m in 1..=8 {
            let res = weyl_character_residual(n, m, 100, cfg)?;
            r.check_with(format!("({n},{m})"), res < cfg.character_tol, format!("{res:e}"));
        }
    }
    Ok(r)
}

fn positivity_all(cfg: &Config) -> Result<Report> {
    let mut r = Report::new("Q positivity", "Q_lambda > 0 on sampled points of the region X, |lambda| <= 10");
    for w in enumerate_simples(GroupId::A2, 10) {
        r.check(format!("{w}"), q_positivity_check(&w, 200, cfg.seed)?);
    }
    Ok(r)
}

fn sp4_level_one(cfg: &Config) -> Result<Report> {
    let q = verify_quotient_theorem(GroupId::C2, 1, cfg)?;
    let mut r = Report::new("quotient C2 k=1", "recorded counterexample: at k = 1 sigma = 1 and the quotient has dimension 2");
    let rank = &q.checks[0];
    r.check_with("rank check fails as recorded", !rank.passed, rank.detail.clone().unwrap_or_default());
    r.check("point is a common zero", q.checks[1].passed);
    Ok(r)
}

/// The tasks of one suite. `k` restricts the psi suite to one level.
pub fn suite_tasks(name: &str, k: Option<i64>, cfg: &Config) -> Option<Vec<Task>> {
    let mut t: Vec<Task> = Vec::new();
    let c = cfg.clone();
    match name {
        "tables" => {
            t.push(Task::new("tables", || Ok(verify_tables())));
            t.push(Task::new("charpoly lemmas", charpoly_lemmas));
            t.push(Task::new("lemma9", lemma9_all));
            let c2 = c.clone();
            t.push(Task::new("weyl character", move || weyl_all(&c2)));
            t.push(Task::new("Q positivity", move || positivity_all(&c)));
        }
        "fusion" => {
            for g in GroupId::ALL {
                let top = if g == GroupId::A1 { 20 } else { 8 };
                for lv in 1..=top {
                    let c = c.clone();
                    t.push(Task::new(format!("fusion {g} k={lv}"), move || dual_oracle_check(g, lv, &c)));
                }
                for lv in 1..=6 {
                    let c = c.clone();
                    t.push(Task::new(format!("spectral {g} k={lv}"), move || spectral_check(g, lv, &c)));
                }
                for lv in 1..=4 {
                    let c = c.clone();
                    t.push(Task::new(format!("variety {g} k={lv}"), move || fusion_variety_check(g, lv, &c)));
                }
            }
        }
        "ideals" => {
            for (g, top) in [(GroupId::A1, 10), (GroupId::A2, 6), (GroupId::C2, 4), (GroupId::G2, 3)] {
                for lv in 1..=top {
                    t.push(Task::new(format!("gepner {g} k={lv}"), move || verify_gepner_fuchs(g, lv)));
                }
            }
            for lv in 1..=8 {
                t.push(Task::new(format!("generation k={lv}"), move || verify_lemma_generation(lv)));
            }
        }
        "psi" => {
            let levels: Vec<i64> = match k {
                Some(k) => vec![k],
                None => (1..=5).collect(),
            };
            for lv in levels {
                t.push(Task::new(format!("psi k={lv}"), move || verify_psi(lv, 6)));
            }
            if k.is_none() {
                for (g, lo, hi) in [(GroupId::A1, 1, 12), (GroupId::A2, 1, 6), (GroupId::C2, 2, 6), (GroupId::G2, 1, 5)] {
                    for lv in lo..=hi {
                        let c = c.clone();
                        t.push(Task::new(format!("quotient {g} k={lv}"), move || verify_quotient_theorem(g, lv, &c)));
                    }
                }
                t.push(Task::new("quotient C2 k=1", move || sp4_level_one(&c)));
            }
        }
        "identities" => {
            t.push(Task::new("verlinde identities", || verlinde_identities_check(20)));
            t.push(Task::new("invertibility", || invertibility_checks(50)));
            for n in 2..=6 {
                t.push(Task::new(format!("riesz n={n}"), move || riesz_counterexample_search(n, 3)));
            }
            let (c1, c2, c3) = (c.clone(), c.clone(), c);
            t.push(Task::new("s3", move || s3_example_check(100, &c1)));
            t.push(Task::new("ses A1", move || ses_rank_checks(GroupId::A1, 50, c2.seed)));
            t.push(Task::new("ses A2", move || ses_rank_checks(GroupId::A2, 30, c3.seed)));
        }
        "experiments-small" => {
            for g in [GroupId::C2, GroupId::G2] {
                let seed = c.seed;
                t.push(Task::new(format!("nullity {g}"), move || {
                    Ok(nullity_experiments(g, 20, seed)?.to_report())
                }));
            }
        }
        _ => return None,
    }
    Some(t)
}

/// Parses a weight and checks its arity against the group.
pub fn parse_weight(g: GroupId, text: &str) -> Result<Weight> {
    let w: Weight = text.parse()?;
    g.check_rank(&w)?;
    Ok(w)
}
