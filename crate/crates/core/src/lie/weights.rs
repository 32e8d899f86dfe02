use std::collections::{BTreeMap, HashMap, VecDeque};

use super::group::{GroupId, Weight};
use super::roots::root_system;
use super::tensor::dominant_representative;
use crate::error::{Error, Result};

/// Weight multiplicities of a classical irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub group: GroupId,
    pub highest: Weight,
    pub mults: BTreeMap<Weight, u64>,
}

impl WeightSystem {
    pub fn dim(&self) -> u64 {
        self.mults.values().sum()
    }

    pub fn mult(&self, w: &Weight) -> u64 {
        self.mults.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.mults.iter()
    }
}

/// Freudenthal's recursion, run over all weights in order of increasing
/// depth below the highest weight.
pub fn weight_system(g: GroupId, lambda: &Weight) -> Result<WeightSystem> {
    g.check_rank(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant {
            weight: lambda.to_string(),
        });
    }
    let rs = root_system(g);
    let r = g.rank();

    // Weights reachable by lowering whose dominant representative sits
    // below lambda.
    let mut depth: HashMap<Weight, i64> = HashMap::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    depth.insert(*lambda, 0);
    queue.push_back(*lambda);
    while let Some(mu) = queue.pop_front() {
        order.push(mu);
        let d = depth[&mu];
        for i in 0..r {
            let nu = mu - rs.simple_root(i);
            if depth.contains_key(&nu) {
                continue;
            }
            let dom = dominant_representative(g, &nu);
            if rs.in_positive_root_cone(&(*lambda - dom)) {
                depth.insert(nu, d + 1);
                queue.push_back(nu);
            }
        }
    }
    // BFS visits in non-decreasing depth already.

    let rho = g.rho();
    let lr = *lambda + rho;
    let top = rs.ip_num(&lr, &lr);
    let mut mults: HashMap<Weight, i64> = HashMap::with_capacity(order.len());
    mults.insert(*lambda, 1);
    for mu in order.iter().skip(1) {
        let mr = *mu + rho;
        let denom = top - rs.ip_num(&mr, &mr);
        let mut num = 0i64;
        for alpha in &rs.positive_roots {
            let mut j = 1;
            loop {
                let nu = *mu + alpha.scale(j);
                match mults.get(&nu) {
                    Some(&m) => num += m * rs.ip_num(&nu, alpha),
                    None => {
                        if !depth.contains_key(&nu) {
                            break;
                        }
                    }
                }
                j += 1;
            }
        }
        num *= 2;
        if denom <= 0 || num % denom != 0 {
            return Err(Error::Internal(format!(
                "Freudenthal step at {mu} for {lambda} is not integral ({num}/{denom})"
            )));
        }
        let m = num / denom;
        if m > 0 {
            mults.insert(*mu, m);
        }
    }
    Ok(WeightSystem {
        group: g,
        highest: *lambda,
        mults: mults.into_iter().map(|(w, m)| (w, m as u64)).collect(),
    })
}

/// Weyl dimension formula `prod (lambda+rho, alpha) / (rho, alpha)`.
pub fn weyl_dimension(g: GroupId, lambda: &Weight) -> u128 {
    let rs = root_system(g);
    let rho = g.rho();
    let lr = *lambda + rho;
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for a in &rs.positive_roots {
        num *= rs.ip_num(&lr, a) as i128;
        den *= rs.ip_num(&rho, a) as i128;
    }
    (num / den) as u128
}
