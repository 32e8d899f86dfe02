use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::supports::{sigma_of, step_support};
use crate::error::{Error, Result};
use crate::fusion::{FusionCategory, FusionRingElement};
use crate::linalg::{exact_rank, SparseMatrix};

/// How consecutive levels are joined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepRule {
    /// `M_pi` and `M_pi-bar` in turn, vertices the supports of
    /// `pi^ceil(m/2) pi-bar^floor(m/2)`.
    Alternating,
    /// `M_sigma` between the supports of `sigma^n`.
    Uniform,
    /// `N_sigma` on every simple at every level.
    Constant,
}

impl FromStr for StepRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "alternating" => Ok(StepRule::Alternating),
            "uniform" => Ok(StepRule::Uniform),
            "constant" => Ok(StepRule::Constant),
            o => Err(Error::Parse(format!("unknown step rule '{o}'"))),
        }
    }
}

impl fmt::Display for StepRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepRule::Alternating => "alternating",
            StepRule::Uniform => "uniform",
            StepRule::Constant => "constant",
        })
    }
}

/// Levels are index sets into the simples of the category; `steps[m]`
/// has rows for level `m` and columns for level `m + 1`.
#[derive(Clone, Debug)]
pub struct BratteliDiagram {
    pub rule: StepRule,
    pub labels: Vec<String>,
    pub levels: Vec<Vec<usize>>,
    pub steps: Vec<SparseMatrix>,
}

fn restricted(m: &SparseMatrix, rows: &[usize], cols: &[usize]) -> SparseMatrix {
    m.select(rows, cols)
}

fn fusion_matrix(cat: &FusionCategory, x: &FusionRingElement) -> SparseMatrix {
    let n = cat.rank();
    let mut acc = SparseMatrix::zeros(n, n);
    for i in x.support() {
        let c: i64 = x.coeff(i).try_into().expect("small coefficient");
        acc = acc.add(&cat.matrix(i).scale(c));
    }
    acc
}

fn as_set(n: usize, idx: &[usize]) -> Vec<bool> {
    let mut v = vec![false; n];
    for &i in idx {
        v[i] = true;
    }
    v
}

fn from_set(v: &[bool]) -> Vec<usize> {
    (0..v.len()).filter(|&i| v[i]).collect()
}

/// The diagram of the tower generated by the simple `pi`, `depth` steps deep.
pub fn bratteli(cat: &Arc<FusionCategory>, pi: usize, rule: StepRule, depth: usize) -> Result<BratteliDiagram> {
    if pi >= cat.rank() {
        return Err(Error::Unsupported(format!("no simple with index {pi}")));
    }
    let n = cat.rank();
    let p = FusionRingElement::basis(cat, pi);
    let pbar = p.dual();
    let sigma = sigma_of(cat, pi);
    let m_sigma = fusion_matrix(cat, &sigma);
    let mut levels = vec![];
    let mut steps = vec![];
    match rule {
        StepRule::Constant => {
            let all: Vec<usize> = (0..n).collect();
            levels = vec![all; depth + 1];
            steps = vec![m_sigma; depth];
        }
        StepRule::Uniform | StepRule::Alternating => {
            let mut cur = vec![cat.unit()];
            levels.push(cur.clone());
            for m in 0..depth {
                let x = match rule {
                    StepRule::Uniform => &sigma,
                    _ if m % 2 == 0 => &p,
                    _ => &pbar,
                };
                let next = from_set(&step_support(cat, x, &as_set(n, &cur)));
                let full = match rule {
                    StepRule::Uniform => m_sigma.clone(),
                    _ => cat.matrix(x.support()[0]).clone(),
                };
                steps.push(restricted(&full, &cur, &next));
                levels.push(next.clone());
                cur = next;
            }
        }
    }
    Ok(BratteliDiagram {
        rule,
        labels: cat.labels().to_vec(),
        levels,
        steps,
    })
}

impl BratteliDiagram {
    pub fn depth(&self) -> usize {
        self.steps.len()
    }

    /// Shapes agree, entries are non-negative, and for `sigma`-steps the
    /// vertex sets never shrink.
    pub fn validate(&self) -> Result<()> {
        for (m, s) in self.steps.iter().enumerate() {
            if s.rows() != self.levels[m].len() || s.cols() != self.levels[m + 1].len() {
                return Err(Error::Internal(format!("step {m} has the wrong shape")));
            }
            if s.to_dense().iter().flatten().any(|&v| v < 0) {
                return Err(Error::Internal(format!("step {m} has a negative entry")));
            }
        }
        let stride = if self.rule == StepRule::Alternating { 2 } else { 1 };
        for m in stride..self.levels.len() {
            let prev = &self.levels[m - stride];
            if !prev.iter().all(|i| self.levels[m].contains(i)) {
                return Err(Error::Internal(format!("level {m} lost a vertex")));
            }
        }
        Ok(())
    }

    /// Rank of the limit group tensored with Q, read off the last two
    /// steps: once vertex sets stabilise the step is a fixed matrix (or a
    /// fixed pair for the alternating rule) whose image rank persists.
    pub fn limit_rank(&self, seed: u64) -> Result<usize> {
        let d = self.depth();
        let need = if self.rule == StepRule::Alternating { 2 } else { 1 };
        if d < need + 1 {
            return Err(Error::Unsupported("diagram too shallow for the limit rank".into()));
        }
        let stable = self.levels[d] == self.levels[d - need];
        if !stable {
            return Err(Error::Unsupported("vertex sets have not stabilised".into()));
        }
        let m = if need == 2 {
            self.steps[d - 2].mul(&self.steps[d - 1])?
        } else {
            self.steps[d - 1].clone()
        };
        Ok(exact_rank(&m, seed).rank)
    }

    /// Graphviz layout with one rank per level; edges carry multiplicities.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph bratteli {\n  rankdir=TB;\n");
        for (m, lv) in self.levels.iter().enumerate() {
            out.push_str("  { rank=same;");
            for &i in lv {
                out.push_str(&format!(" \"{m}:{}\"", self.labels[i]));
            }
            out.push_str(" }\n");
        }
        for (m, s) in self.steps.iter().enumerate() {
            for r in 0..s.rows() {
                for &(c, v) in s.row(r) {
                    let a = &self.labels[self.levels[m][r]];
                    let b = &self.labels[self.levels[m + 1][c]];
                    if v == 1 {
                        out.push_str(&format!("  \"{m}:{a}\" -> \"{}:{b}\";\n", m + 1));
                    } else {
                        out.push_str(&format!("  \"{m}:{a}\" -> \"{}:{b}\" [label=\"{v}\"];\n", m + 1));
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "rule": self.rule,
            "levels": self.levels.iter().map(|lv| lv.iter().map(|&i| self.labels[i].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "steps": self.steps.iter().map(SparseMatrix::to_dense).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{GroupId, Weight};

    #[test]
    fn su2_level_one_is_trivial() {
        let cat = FusionCategory::wzw(GroupId::A1, 1).unwrap();
        let d = bratteli(&cat, 1, StepRule::Uniform, 3).unwrap();
        assert_eq!(d.levels, vec![vec![0]; 4]);
        assert!(d.steps.iter().all(|s| s.to_dense() == vec![vec![1]]));
        let z = bratteli(&cat, 1, StepRule::Uniform, 0).unwrap();
        assert_eq!(z.levels, vec![vec![0]]);
        assert!(z.steps.is_empty());
    }

    #[test]
    fn su3_alternating_matches_b_sets() {
        let cat = FusionCategory::wzw(GroupId::A2, 2).unwrap();
        let pi = cat.index_of(&Weight::new(&[1, 0])).unwrap();
        let d = bratteli(&cat, pi, StepRule::Alternating, 6).unwrap();
        d.validate().unwrap();
        for (m, lv) in d.levels.iter().enumerate() {
            let n = (m / 2) as i64;
            let shift = (m % 2) as i64;
            let want: Vec<usize> = (0..cat.rank())
                .filter(|&i| {
                    let [a, b] = cat.weights()[i].coords();
                    let a = a - shift;
                    (a - b).rem_euclid(3) == 0 && a + 2 * b <= 3 * n && 2 * a + b <= 3 * n
                })
                .collect();
            assert_eq!(lv, &want, "level {m}");
        }
    }

    #[test]
    fn constant_rule_and_dot() {
        let cat = FusionCategory::wzw(GroupId::A1, 2).unwrap();
        let d = bratteli(&cat, 1, StepRule::Constant, 2).unwrap();
        d.validate().unwrap();
        assert_eq!(d.levels[1].len(), 3);
        assert!(d.to_dot().contains("\"0:(1)\" -> \"1:(1)\" [label=\"2\"]"));
        assert_eq!(d.limit_rank(1).unwrap(), 2);
    }
}
