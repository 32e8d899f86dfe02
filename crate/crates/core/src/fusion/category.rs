use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use super::kac_walton::kw_matrix;
use crate::error::{Error, Result};
use crate::lie::{level, GroupId, Weight};
use crate::linalg::SparseMatrix;

/// Dominant weights of level at most `k`, ordered by comparing the last
/// label first: `(0,0), (1,0), (0,1)` for SU(3) at level one.
pub fn enumerate_simples(g: GroupId, k: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let a = g.colabels();
    if g.rank() == 1 {
        for l in 0..=k {
            out.push(Weight::new(&[l]));
        }
        return out;
    }
    for l2 in 0..=k / a[1] {
        for l1 in 0..=(k - a[1] * l2) / a[0] {
            out.push(Weight::new(&[l1, l2]));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Source {
    Wzw { group: GroupId, level: i64 },
    Explicit,
}

/// JSON document for user-supplied fusion rules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplicitData {
    pub labels: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    /// `[i, j, k, mult]`: `N_{ij}^k = mult`; omitted entries are zero.
    pub tensor: Vec<[i64; 4]>,
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Simple objects, duality and fusion matrices. `N_i` has rows `nu` and
/// columns `mu` holding `N_{i nu}^mu`.
#[derive(Debug)]
pub struct FusionCategory {
    id: u64,
    source: Source,
    labels: Vec<String>,
    weights: Vec<Weight>,
    index: HashMap<Weight, usize>,
    unit: usize,
    dual: Vec<usize>,
    matrices: Vec<OnceLock<SparseMatrix>>,
}

impl FusionCategory {
    /// Rep_k(G). Fusion matrices are computed on first use.
    pub fn wzw(g: GroupId, k: i64) -> Result<Arc<Self>> {
        if k < 1 {
            return Err(Error::Unsupported(format!("level must be positive, got {k}")));
        }
        let weights = enumerate_simples(g, k);
        let index: HashMap<Weight, usize> = weights.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        let dual = weights
            .iter()
            .map(|w| match g {
                GroupId::A2 => index[&w.swapped()],
                _ => index[w],
            })
            .collect();
        let n = weights.len();
        Ok(Arc::new(FusionCategory {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            source: Source::Wzw { group: g, level: k },
            labels: weights.iter().map(Weight::to_string).collect(),
            unit: 0,
            dual,
            index,
            weights,
            matrices: (0..n).map(|_| OnceLock::new()).collect(),
        }))
    }

    /// Validates associativity, commutativity, unit, Frobenius symmetry
    /// and non-negativity before accepting the data.
    pub fn explicit(data: ExplicitData) -> Result<Arc<Self>> {
        let n = data.labels.len();
        let bad = |m: String| Err(Error::InvalidFusionData(m));
        if n == 0 {
            return bad("no simple objects".into());
        }
        if data.unit >= n {
            return bad(format!("unit index {} out of range", data.unit));
        }
        if data.dual.len() != n || data.dual.iter().any(|&d| d >= n) {
            return bad("dual must list one valid index per label".into());
        }
        for (i, &d) in data.dual.iter().enumerate() {
            if data.dual[d] != i {
                return bad(format!("dual is not an involution at {i}"));
            }
        }
        let mut trip: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); n];
        for t in &data.tensor {
            let [i, j, k, m] = *t;
            if [i, j, k].iter().any(|&x| x < 0 || x as usize >= n) {
                return bad(format!("tensor entry {t:?} out of range"));
            }
            if m < 0 {
                return bad(format!("negative multiplicity in {t:?}"));
            }
            trip[i as usize].push((j as usize, k as usize, m));
        }
        let mats: Vec<SparseMatrix> = trip
            .into_iter()
            .map(|t| SparseMatrix::from_triplets(n, n, t))
            .collect();
        let cat = FusionCategory {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            source: Source::Explicit,
            index: HashMap::new(),
            weights: Vec::new(),
            unit: data.unit,
            dual: data.dual,
            matrices: mats
                .into_iter()
                .map(|m| {
                    let c = OnceLock::new();
                    let _ = c.set(m);
                    c
                })
                .collect(),
            labels: data.labels,
        };
        cat.validate()?;
        Ok(Arc::new(cat))
    }

    pub fn from_json(text: &str) -> Result<Arc<Self>> {
        let data: ExplicitData =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("fusion data: {e}")))?;
        Self::explicit(data)
    }

    /// Checks the fusion-ring axioms on every stored or computable matrix.
    pub fn validate(&self) -> Result<()> {
        let n = self.rank();
        let bad = |m: String| Err(Error::InvalidFusionData(m));
        if self.matrix(self.unit) != &SparseMatrix::identity(n) {
            return bad("unit does not act as the identity".into());
        }
        for i in 0..n {
            let ni = self.matrix(i);
            if ni.to_dense().iter().flatten().any(|&v| v < 0) {
                return bad(format!("negative entry in N_{}", self.labels[i]));
            }
            if self.matrix(self.dual[i]) != &ni.transpose() {
                return bad(format!("Frobenius symmetry fails for {}", self.labels[i]));
            }
            for j in 0..n {
                let nj = self.matrix(j);
                let ij = ni.mul(nj)?;
                if ij != nj.mul(ni)? {
                    return bad(format!(
                        "fusion is not commutative for {} and {}",
                        self.labels[i], self.labels[j]
                    ));
                }
                let mut rhs = SparseMatrix::zeros(n, n);
                for &(k, m) in ni.row(j) {
                    rhs = rhs.add(&self.matrix(k).scale(m));
                }
                if ij != rhs {
                    return bad(format!(
                        "associativity fails for {} and {}",
                        self.labels[i], self.labels[j]
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn group(&self) -> Option<GroupId> {
        match self.source {
            Source::Wzw { group, .. } => Some(group),
            Source::Explicit => None,
        }
    }

    pub fn level(&self) -> Option<i64> {
        match self.source {
            Source::Wzw { level, .. } => Some(level),
            Source::Explicit => None,
        }
    }

    /// Number of simple objects.
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Highest weights (empty for explicit data).
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> Option<Weight> {
        self.weights.get(i).copied()
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    /// Fusion matrix `N_i`, computed by Kac-Walton on first use for WZW data.
    pub fn matrix(&self, i: usize) -> &SparseMatrix {
        self.matrices[i].get_or_init(|| match self.source {
            Source::Wzw { group, level } => kw_matrix(group, level, &self.weights, &self.index, &self.weights[i])
                .unwrap_or_else(|e| panic!("Kac-Walton for {}: {e}", self.labels[i])),
            Source::Explicit => unreachable!("explicit matrices are stored eagerly"),
        })
    }

    /// `N_{ij}^k`.
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> i64 {
        self.matrix(i).get(j, k)
    }

    pub fn same(&self, other: &FusionCategory) -> bool {
        self.id == other.id
    }

    pub fn weight_index(&self, w: &Weight) -> Result<usize> {
        let g = self.group().ok_or_else(|| Error::Unsupported("weights need WZW data".into()))?;
        g.check_rank(w)?;
        let k = self.level().unwrap();
        self.index_of(w).ok_or_else(|| Error::Unsupported(format!(
            "{w} has level {} above {k}",
            level(g, w).unwrap_or(-1)
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3_data() -> ExplicitData {
        // 1, s, pi with s^2 = 1, s pi = pi, pi^2 = 1 + s + pi
        let mut t = vec![];
        for i in 0..3 {
            t.push([0, i, i, 1]);
        }
        t.extend([[1, 0, 1, 1], [2, 0, 2, 1]]);
        t.extend([[1, 1, 0, 1], [1, 2, 2, 1], [2, 1, 2, 1], [2, 2, 0, 1], [2, 2, 1, 1], [2, 2, 2, 1]]);
        ExplicitData {
            labels: vec!["1".into(), "s".into(), "pi".into()],
            unit: 0,
            dual: vec![0, 1, 2],
            tensor: t,
        }
    }

    #[test]
    fn simples_examples() {
        let w = |l: &[i64]| Weight::new(l);
        assert_eq!(enumerate_simples(GroupId::A2, 1), vec![w(&[0, 0]), w(&[1, 0]), w(&[0, 1])]);
        assert_eq!(enumerate_simples(GroupId::A1, 4).len(), 5);
        assert_eq!(
            enumerate_simples(GroupId::G2, 2),
            vec![w(&[0, 0]), w(&[1, 0]), w(&[2, 0]), w(&[0, 1])]
        );
        for k in 1..10 {
            assert_eq!(enumerate_simples(GroupId::A2, k).len() as i64, (k + 1) * (k + 2) / 2);
        }
    }

    #[test]
    fn explicit_s3_accepted() {
        let c = FusionCategory::explicit(s3_data()).unwrap();
        assert_eq!(c.coefficient(2, 2, 1), 1);
    }

    #[test]
    fn broken_tensors_rejected() {
        let mut d = s3_data();
        d.tensor.retain(|t| *t != [2, 2, 1, 1]);
        assert!(FusionCategory::explicit(d).is_err(), "missing s in pi^2");

        let mut d = s3_data();
        d.tensor.push([1, 1, 1, 1]);
        assert!(FusionCategory::explicit(d).is_err(), "extra term in s^2");

        let mut d = s3_data();
        d.tensor.retain(|t| *t != [0, 1, 1, 1]);
        assert!(FusionCategory::explicit(d).is_err(), "unit broken");

        let mut d = s3_data();
        d.tensor.retain(|t| *t != [2, 1, 2, 1]);
        assert!(FusionCategory::explicit(d).is_err(), "non-commutative");

        let mut d = s3_data();
        d.dual = vec![0, 2, 1];
        assert!(FusionCategory::explicit(d).is_err(), "wrong duality");

        let mut d = s3_data();
        d.tensor.push([1, 1, 0, -1]);
        assert!(FusionCategory::explicit(d).is_err(), "negative multiplicity");
    }

    #[test]
    fn json_parsing() {
        let text = serde_json::to_string(&s3_data()).unwrap();
        assert!(FusionCategory::from_json(&text).is_ok());
        assert!(FusionCategory::from_json("{\"labels\":[]}").is_err());
    }

    #[test]
    fn wzw_categories_satisfy_axioms() {
        for g in GroupId::ALL {
            for k in 1..4 {
                FusionCategory::wzw(g, k).unwrap().validate().unwrap();
            }
        }
    }
}
