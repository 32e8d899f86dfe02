use std::collections::{BTreeMap, HashMap};

use super::category::enumerate_simples;
use crate::error::{Error, Result};
use crate::lie::{affine_fold, level, weight_system, Fold, GroupId, Weight};
use crate::linalg::SparseMatrix;

pub(crate) fn kw_matrix(
    g: GroupId,
    k: i64,
    simples: &[Weight],
    index: &HashMap<Weight, usize>,
    pi: &Weight,
) -> Result<SparseMatrix> {
    let ws = weight_system(g, pi)?;
    let n = simples.len();
    let mut trip = Vec::new();
    for (row, nu) in simples.iter().enumerate() {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (beta, &m) in ws.iter() {
            if let Fold::Chamber { weight, sign } = affine_fold(g, k, &(*nu + *beta))? {
                let col = *index
                    .get(&weight)
                    .ok_or_else(|| Error::Internal(format!("fold of {nu}+{beta} left the alcove")))?;
                *acc.entry(col).or_default() += sign * m as i64;
            }
        }
        for (col, c) in acc {
            if c < 0 {
                return Err(Error::Internal(format!(
                    "negative fusion coefficient {c} in {pi} x {nu}"
                )));
            }
            trip.push((row, col, c));
        }
    }
    Ok(SparseMatrix::from_triplets(n, n, trip))
}

/// Fusion matrix of `pi` in Rep_k(G) by the Kac-Walton algorithm; row `nu`
/// lists the decomposition of `pi (x) nu`.
pub fn fusion_matrix_kw(g: GroupId, k: i64, pi: &Weight) -> Result<SparseMatrix> {
    g.check_rank(pi)?;
    if !pi.is_dominant() {
        return Err(Error::NotDominant { weight: pi.to_string() });
    }
    if level(g, pi)? > k {
        return Err(Error::Unsupported(format!("{pi} is not a level {k} weight")));
    }
    let simples = enumerate_simples(g, k);
    let index = simples.iter().enumerate().map(|(i, w)| (*w, i)).collect();
    kw_matrix(g, k, &simples, &index, pi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su2_level_two() {
        // V1 x V1 = V0 + V2, V1 x V2 = V1
        let m = fusion_matrix_kw(GroupId::A1, 2, &Weight::new(&[1])).unwrap();
        assert_eq!(m.to_dense(), vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]);
    }

    #[test]
    fn su3_level_one_is_cyclic() {
        let m = fusion_matrix_kw(GroupId::A2, 1, &Weight::new(&[1, 0])).unwrap();
        // (1,0)x(0,0)=(1,0), (1,0)x(1,0)=(0,1), (1,0)x(0,1)=(0,0)
        assert_eq!(m.to_dense(), vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]);
    }

    #[test]
    fn g2_level_one_fibonacci() {
        let m = fusion_matrix_kw(GroupId::G2, 1, &Weight::new(&[1, 0])).unwrap();
        assert_eq!(m.to_dense(), vec![vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn rejects_high_level() {
        assert!(fusion_matrix_kw(GroupId::A2, 1, &Weight::new(&[1, 1])).is_err());
        assert!(fusion_matrix_kw(GroupId::A2, 1, &Weight::new(&[1])).is_err());
    }
}
