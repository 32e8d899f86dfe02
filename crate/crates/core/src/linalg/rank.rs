use serde::{Deserialize, Serialize};

use super::modular::{random_primes, Montgomery};
use super::sparse::SparseMatrix;

/// Rank over Q certified by elimination modulo several primes. Each modular
/// rank is a lower bound for the rational rank; the reported rank is the
/// largest of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCertificate {
    pub rank: usize,
    pub primes: Vec<u64>,
    pub ranks: Vec<usize>,
    pub agreed: bool,
}

impl RankCertificate {
    pub fn nullity(&self, n: usize) -> usize {
        n - self.rank
    }

    pub fn describe(&self) -> String {
        format!(
            "rank {} modulo primes {:?} (per-prime ranks {:?}{})",
            self.rank,
            self.primes,
            self.ranks,
            if self.agreed { ", all agree" } else { ", disagreement" }
        )
    }
}

/// A row stored densely from its leading column on.
struct Segment {
    start: usize,
    vals: Vec<u64>,
    origin: usize,
}

impl Segment {
    fn normalize(mut self) -> Option<Segment> {
        let lead = self.vals.iter().position(|&v| v != 0)?;
        let last = self.vals.iter().rposition(|&v| v != 0).unwrap();
        self.vals.truncate(last + 1);
        if lead > 0 {
            self.vals.drain(..lead);
            self.start += lead;
        }
        Some(self)
    }
}

pub(crate) struct Elimination {
    pub rank: usize,
    /// `pivots[c] = Some((origin row, pivot value))` in Montgomery form.
    pub pivots: Vec<Option<(usize, u64)>>,
}

/// Gaussian elimination with rows bucketed by leading column; the shortest
/// row of each bucket becomes the pivot. Fill stays inside each row's
/// envelope, so banded matrices stay cheap.
pub(crate) fn eliminate(m: &SparseMatrix, mont: &Montgomery) -> Elimination {
    let cols = m.cols();
    let mut buckets: Vec<Vec<Segment>> = (0..cols).map(|_| Vec::new()).collect();
    for i in 0..m.rows() {
        let row = m.row(i);
        let mut vals_nonzero = row.iter().filter(|e| e.1 as i128 % mont.p as i128 != 0);
        let Some(&(first, _)) = vals_nonzero.next() else {
            continue;
        };
        let last = row.last().unwrap().0;
        let mut vals = vec![0u64; last - first + 1];
        for &(j, v) in row {
            if j >= first {
                vals[j - first] = mont.from_i64(v);
            }
        }
        if let Some(seg) = (Segment { start: first, vals, origin: i }).normalize() {
            buckets[seg.start].push(seg);
        }
    }

    let mut rank = 0;
    let mut pivots = vec![None; cols];
    for c in 0..cols {
        let mut bucket = std::mem::take(&mut buckets[c]);
        if bucket.is_empty() {
            continue;
        }
        let best = (0..bucket.len()).min_by_key(|&i| bucket[i].vals.len()).unwrap();
        let pivot = bucket.swap_remove(best);
        rank += 1;
        let lead = pivot.vals[0];
        pivots[c] = Some((pivot.origin, lead));
        let inv = mont.inv(lead);
        for mut row in bucket {
            let f = mont.mul(row.vals[0], inv);
            if row.vals.len() < pivot.vals.len() {
                row.vals.resize(pivot.vals.len(), 0);
            }
            for (r, &p) in row.vals.iter_mut().zip(pivot.vals.iter()) {
                *r = mont.sub(*r, mont.mul(f, p));
            }
            if let Some(seg) = row.normalize() {
                debug_assert!(seg.start > c);
                buckets[seg.start].push(seg);
            }
        }
    }
    Elimination { rank, pivots }
}

pub fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    eliminate(m, &Montgomery::new(p)).rank
}

/// Rank over Q from three seeded primes near 2^61.
pub fn exact_rank(m: &SparseMatrix, seed: u64) -> RankCertificate {
    let primes = random_primes(seed, 3);
    let ranks: Vec<usize> = primes.iter().map(|&p| rank_mod_p(m, p)).collect();
    let rank = *ranks.iter().max().unwrap();
    RankCertificate {
        rank,
        agreed: ranks.iter().all(|&r| r == rank),
        primes,
        ranks,
    }
}
