use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fusion::FusionCategory;
use crate::lie::{GroupId, Weight};
use crate::linalg::{exact_det, exact_rank};
use crate::report::Report;

/// Rank data for one fusion matrix at one level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NullityRow {
    pub group: GroupId,
    pub k: i64,
    pub pi: Weight,
    pub size: usize,
    pub rank: usize,
    pub nullity: usize,
    /// `(d, d | k + h)` for the divisors entering the prediction.
    pub flags: Vec<(i64, bool)>,
    /// Predicted nullity, or only predicted invertibility.
    pub expected: Expectation,
    pub primes_agree: bool,
    pub matches: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    Nullity(usize),
    Invertible(bool),
}

fn prediction(g: GroupId, pi: &Weight, k: i64) -> Result<(Vec<(i64, bool)>, Expectation)> {
    let h = k + g.dual_coxeter();
    let flags = |ds: &[i64]| ds.iter().map(|&d| (d, h % d == 0)).collect::<Vec<_>>();
    let inv = |f: &[(i64, bool)]| Expectation::Invertible(f.iter().all(|x| !x.1));
    Ok(match (g, pi.coords()) {
        (GroupId::C2, [1, 0]) => (vec![], Expectation::Nullity(((k + 2) / 2) as usize)),
        (GroupId::C2, [0, 1]) => {
            let f = flags(&[3, 5]);
            let e = inv(&f);
            (f, e)
        }
        (GroupId::G2, [1, 0]) => {
            let f = flags(&[4, 7, 30]);
            let e = inv(&f);
            (f, e)
        }
        (GroupId::G2, [0, 1]) => {
            let f = flags(&[5, 7, 8]);
            let e = inv(&f);
            (f, e)
        }
        (GroupId::A1, [1, _]) => (flags(&[2]), Expectation::Nullity((k % 2 == 0) as usize)),
        (GroupId::A2, [1, 0]) => (vec![(3, k % 3 == 0)], Expectation::Nullity((k % 3 == 0) as usize)),
        _ => return Err(Error::Unsupported(format!("no prediction for {pi} in {g}"))),
    })
}

/// Nullity of `N_pi` at level `k` by three-prime modular rank.
pub fn nullity_row(g: GroupId, pi: &Weight, k: i64, seed: u64) -> Result<NullityRow> {
    let (flags, expected) = prediction(g, pi, k)?;
    let cat = FusionCategory::wzw(g, k)?;
    let i = cat.weight_index(pi)?;
    let cert = exact_rank(cat.matrix(i), seed);
    let size = cat.rank();
    let nullity = size - cert.rank;
    let matches = match expected {
        Expectation::Nullity(v) => v == nullity,
        Expectation::Invertible(b) => b == (nullity == 0),
    };
    Ok(NullityRow {
        group: g,
        k,
        pi: *pi,
        size,
        rank: cert.rank,
        nullity,
        flags,
        expected,
        primes_agree: cert.agreed,
        matches,
    })
}

/// Rows sorted by `(k, pi)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NullityTable {
    pub group: GroupId,
    pub rows: Vec<NullityRow>,
}

impl NullityTable {
    pub fn from_rows(group: GroupId, mut rows: Vec<NullityRow>) -> Self {
        rows.sort_by_key(|r| (r.k, r.pi.colex_key()));
        NullityTable { group, rows }
    }

    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }

    /// One line per level: `k`, `h = k + h∨`, the matrix size, the tested
    /// divisors of `h`, then rank, nullity, prediction and match for each
    /// weight of [`nullity_pis`] (empty where the weight is above level
    /// `k`), and the overall match.
    pub fn to_csv(&self) -> String {
        let pis = nullity_pis(self.group);
        let tag = |p: &Weight| p.labels().iter().map(|l| l.to_string()).collect::<String>();
        let mut out = String::from("k,h,size,divides_h");
        for p in &pis {
            let t = tag(p);
            out.push_str(&format!(",rank_{t},nullity_{t},expected_{t},match_{t}"));
        }
        out.push_str(",match\n");
        let mut levels: Vec<i64> = self.rows.iter().map(|r| r.k).collect();
        levels.dedup();
        for k in levels {
            let rows: Vec<&NullityRow> = self.rows.iter().filter(|r| r.k == k).collect();
            let mut divs: Vec<i64> = rows.iter().flat_map(|r| r.flags.iter().filter(|f| f.1).map(|f| f.0)).collect();
            divs.sort_unstable();
            divs.dedup();
            let divs: Vec<String> = divs.iter().map(i64::to_string).collect();
            out.push_str(&format!(
                "{k},{},{},{}",
                k + self.group.dual_coxeter(),
                rows[0].size,
                divs.join(" ")
            ));
            for p in &pis {
                match rows.iter().find(|r| r.pi == *p) {
                    Some(r) => {
                        let expected = match r.expected {
                            Expectation::Nullity(v) => format!("nullity {v}"),
                            Expectation::Invertible(true) => "invertible".into(),
                            Expectation::Invertible(false) => "singular".into(),
                        };
                        out.push_str(&format!(",{},{},{expected},{}", r.rank, r.nullity, r.matches));
                    }
                    None => out.push_str(",,,,"),
                }
            }
            out.push_str(&format!(",{}\n", rows.iter().all(|r| r.matches)));
        }
        out
    }

    pub fn to_report(&self) -> Report {
        let mut rep = Report::new(
            format!("nullity {}", self.group),
            match self.group {
                GroupId::C2 => "Sp(4): nullity N_(1,0) = floor((k+2)/2); N_(0,1) invertible iff 3, 5 do not divide k+3",
                GroupId::G2 => "G2: N_(1,0) invertible iff 4, 7, 30 do not divide k+4; N_(0,1) iff 5, 7, 8 do not",
                _ => "nullity of the fundamental fusion matrix",
            },
        );
        for r in &self.rows {
            rep.check_with(
                format!("k={} pi={}", r.k, r.pi),
                r.matches,
                format!("nullity {} of {}", r.nullity, r.size),
            );
        }
        rep
    }
}

pub fn nullity_pis(g: GroupId) -> Vec<Weight> {
    match g {
        GroupId::C2 | GroupId::G2 => g.fundamentals(),
        _ => vec![g.fundamental(0)],
    }
}

/// All levels `1..=k_max`, computed serially.
pub fn nullity_experiments(g: GroupId, k_max: i64, seed: u64) -> Result<NullityTable> {
    let mut rows = vec![];
    for k in 1..=k_max {
        for pi in nullity_pis(g) {
            // G2's (0,1) has level two and is absent at k = 1
            if crate::lie::level(g, &pi)? <= k {
                rows.push(nullity_row(g, &pi, k, seed)?);
            }
        }
    }
    Ok(NullityTable::from_rows(g, rows))
}

/// Rank data behind the rational short exact sequences for SU(2) and
/// SU(3): nullity of `N_pi` and, for SU(2) at odd level, `det = ±1`.
pub fn ses_rank_checks(g: GroupId, k_max: i64, seed: u64) -> Result<Report> {
    if !matches!(g, GroupId::A1 | GroupId::A2) {
        return Err(Error::Unsupported(format!("rank checks are for su2 and su3, not {g}")));
    }
    let mut r = Report::new(
        format!("ses {g}"),
        match g {
            GroupId::A1 => "0 -> Q -> Ver_k(SU(2)) (x) Q -> K0(B) (x) Q -> 0: N_pi1 has nullity [k even]",
            _ => "N_pi(1,0) is invertible over Q iff k not in 3Z",
        },
    );
    let pi = g.fundamental(0);
    for k in 1..=k_max {
        let row = nullity_row(g, &pi, k, seed)?;
        let mut ok = row.matches && row.rank + row.nullity == row.size;
        let mut detail = format!("nullity {} of {}", row.nullity, row.size);
        if g == GroupId::A1 && k % 2 == 1 {
            let cat = FusionCategory::wzw(g, k)?;
            let d = exact_det(cat.matrix(1))?;
            ok &= d == 1.into() || d == (-1).into();
            detail.push_str(&format!(", det {d}"));
        }
        r.check_with(format!("k={k}"), ok, detail);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quoted_cases() {
        let w = |a, b| Weight::new(&[a, b]);
        let r = nullity_row(GroupId::C2, &w(0, 1), 2, 1).unwrap();
        assert!(r.nullity > 0 && r.matches);
        let r = nullity_row(GroupId::C2, &w(1, 0), 1, 1).unwrap();
        assert_eq!(r.nullity, 1);
        let r = nullity_row(GroupId::G2, &w(1, 0), 3, 1).unwrap();
        assert!(r.nullity > 0 && r.matches);
    }

    #[test]
    fn small_sweeps() {
        assert!(nullity_experiments(GroupId::C2, 12, 3).unwrap().all_match());
        assert!(nullity_experiments(GroupId::G2, 12, 3).unwrap().all_match());
        let t = nullity_experiments(GroupId::C2, 2, 3).unwrap();
        assert_eq!(t.to_csv().lines().count(), 3);
    }

    #[test]
    fn ses_examples() {
        assert!(ses_rank_checks(GroupId::A1, 12, 1).unwrap().passed);
        assert!(ses_rank_checks(GroupId::A2, 9, 1).unwrap().passed);
        assert_eq!(nullity_row(GroupId::A1, &Weight::new(&[1]), 2, 1).unwrap().nullity, 1);
        assert_eq!(nullity_row(GroupId::A2, &Weight::new(&[1, 0]), 3, 1).unwrap().nullity, 1);
    }
}
