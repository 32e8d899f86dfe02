use std::collections::BTreeMap;

use super::group::{GroupId, Weight};
use super::roots::root_system;
use super::weights::weight_system;
use crate::error::{Error, Result};

/// Level `sum a_j^vee lambda_j`.
pub fn level(g: GroupId, lambda: &Weight) -> Result<i64> {
    g.check_rank(lambda)?;
    Ok(level_unchecked(g, lambda))
}

pub(crate) fn level_unchecked(g: GroupId, lambda: &Weight) -> i64 {
    lambda
        .labels()
        .iter()
        .zip(g.colabels())
        .map(|(x, a)| x * a)
        .sum()
}

/// Dominant weight in the Weyl orbit of `v`.
pub(crate) fn dominant_representative(g: GroupId, v: &Weight) -> Weight {
    let rs = root_system(g);
    let mut w = *v;
    while let Some(i) = (0..g.rank()).find(|&i| w[i] < 0) {
        w = rs.reflect(i, &w);
    }
    w
}

/// Outcome of folding a weight into the fundamental alcove.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fold {
    /// The shifted weight lies on a reflecting wall; it contributes nothing.
    Wall,
    Chamber { weight: Weight, sign: i64 },
}

impl Fold {
    pub fn sign(&self) -> i64 {
        match self {
            Fold::Wall => 0,
            Fold::Chamber { sign, .. } => *sign,
        }
    }

    pub fn weight(&self) -> Option<Weight> {
        match self {
            Fold::Wall => None,
            Fold::Chamber { weight, .. } => Some(*weight),
        }
    }
}

/// Dot action of the finite Weyl group: moves `mu + rho` into the open
/// dominant chamber.
pub fn dominant_fold(g: GroupId, mu: &Weight) -> Fold {
    let rs = root_system(g);
    let mut gamma = *mu + g.rho();
    let mut sign = 1;
    loop {
        if gamma.labels().contains(&0) {
            return Fold::Wall;
        }
        match (0..g.rank()).find(|&i| gamma[i] < 0) {
            Some(i) => {
                gamma = rs.reflect(i, &gamma);
                sign = -sign;
            }
            None => {
                return Fold::Chamber {
                    weight: gamma - g.rho(),
                    sign,
                }
            }
        }
    }
}

/// Dot action of the affine Weyl group at shifted level `k + h^vee`.
pub fn affine_fold(g: GroupId, k: i64, mu: &Weight) -> Result<Fold> {
    g.check_rank(mu)?;
    let rs = root_system(g);
    let big_k = k + g.dual_coxeter();
    let bound = 10 * big_k as usize;
    let mut gamma = *mu + g.rho();
    let mut sign = 1;
    for _ in 0..=bound {
        if gamma.labels().contains(&0) {
            return Ok(Fold::Wall);
        }
        if let Some(i) = (0..g.rank()).find(|&i| gamma[i] < 0) {
            gamma = rs.reflect(i, &gamma);
            sign = -sign;
            continue;
        }
        let l = level_unchecked(g, &gamma);
        if l == big_k {
            return Ok(Fold::Wall);
        }
        if l > big_k {
            gamma = gamma - rs.theta.scale(l - big_k);
            sign = -sign;
            continue;
        }
        return Ok(Fold::Chamber {
            weight: gamma - g.rho(),
            sign,
        });
    }
    Err(Error::FoldBound {
        weight: mu.to_string(),
        bound,
    })
}

/// Racah-Speiser: `lambda (x) mu` in Rep(G) from the weights of `mu`.
pub fn classical_tensor(g: GroupId, lambda: &Weight, mu: &Weight) -> Result<BTreeMap<Weight, u64>> {
    g.check_rank(lambda)?;
    let ws = weight_system(g, mu)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant {
            weight: lambda.to_string(),
        });
    }
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (beta, &m) in ws.iter() {
        if let Fold::Chamber { weight, sign } = dominant_fold(g, &(*lambda + *beta)) {
            *acc.entry(weight).or_default() += sign * m as i64;
        }
    }
    let mut out = BTreeMap::new();
    for (w, c) in acc {
        if c < 0 {
            return Err(Error::Internal(format!(
                "negative multiplicity {c} at {w} in {lambda} x {mu}"
            )));
        }
        if c > 0 {
            out.insert(w, c as u64);
        }
    }
    Ok(out)
}
