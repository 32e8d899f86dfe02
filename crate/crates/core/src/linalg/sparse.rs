use std::fmt::Write;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Integer matrix stored as per-row sorted `(column, value)` lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i].push((i, 1));
        }
        m
    }

    pub fn from_dense(d: &[Vec<i64>]) -> Self {
        let rows = d.len();
        let cols = d.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows, cols);
        for (i, r) in d.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged dense matrix");
            m.data[i] = r
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(j, &v)| (j, v))
                .collect();
        }
        m
    }

    /// Builds from unsorted triplets; duplicates add.
    pub fn from_triplets(rows: usize, cols: usize, t: impl IntoIterator<Item = (usize, usize, i64)>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, j, v) in t {
            assert!(i < rows && j < cols, "triplet out of range");
            m.data[i].push((j, v));
        }
        for r in &mut m.data {
            r.sort_unstable_by_key(|e| e.0);
            let mut out: Vec<(usize, i64)> = Vec::with_capacity(r.len());
            for &(j, v) in r.iter() {
                match out.last_mut() {
                    Some(last) if last.0 == j => last.1 += v,
                    _ => out.push((j, v)),
                }
            }
            out.retain(|e| e.1 != 0);
            *r = out;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, i64)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i]
            .binary_search_by_key(&j, |e| e.0)
            .map(|p| self.data[i][p].1)
            .unwrap_or(0)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols]; self.rows];
        for (i, r) in self.data.iter().enumerate() {
            for &(j, v) in r {
                d[i][j] = v;
            }
        }
        d
    }

    pub fn transpose(&self) -> Self {
        let t = self
            .data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |&(j, v)| (j, i, v)));
        Self::from_triplets(self.cols, self.rows, t)
    }

    pub fn mul(&self, o: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != o.rows {
            return Err(Error::Unsupported(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut t = Vec::new();
        for (i, r) in self.data.iter().enumerate() {
            for &(l, a) in r {
                for &(j, b) in &o.data[l] {
                    t.push((i, j, a * b));
                }
            }
        }
        Ok(Self::from_triplets(self.rows, o.cols, t))
    }

    pub fn add(&self, o: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let t = self
            .data
            .iter()
            .chain(o.data.iter())
            .enumerate()
            .flat_map(|(i, r)| {
                let i = i % self.rows;
                r.iter().map(move |&(j, v)| (i, j, v))
            });
        Self::from_triplets(self.rows, self.cols, t)
    }

    pub fn scale(&self, c: i64) -> SparseMatrix {
        let mut m = self.clone();
        for r in &mut m.data {
            for e in r.iter_mut() {
                e.1 *= c;
            }
            r.retain(|e| e.1 != 0);
        }
        m
    }

    /// Row vector times matrix: `(v M)_j = sum_i v_i M_ij`.
    pub fn left_apply_big(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::default(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            if v[i] == BigInt::default() {
                continue;
            }
            for &(j, a) in r {
                out[j] += &v[i] * a;
            }
        }
        out
    }

    pub fn left_apply_f64(&self, v: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for &(j, a) in r {
                out[j] += v[i] * a as f64;
            }
        }
        out
    }

    pub fn right_apply_f64(&self, v: &[f64]) -> Vec<f64> {
        self.data
            .iter()
            .map(|r| r.iter().map(|&(j, a)| a as f64 * v[j]).sum())
            .collect()
    }

    /// Principal submatrix (or general selection) on the given index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> SparseMatrix {
        let mut pos = vec![usize::MAX; self.cols];
        for (k, &c) in cols.iter().enumerate() {
            pos[c] = k;
        }
        let t = rows.iter().enumerate().flat_map(|(ni, &i)| {
            let pos = &pos;
            self.data[i]
                .iter()
                .filter(move |e| pos[e.0] != usize::MAX)
                .map(move |&(j, v)| (ni, pos[j], v))
        });
        Self::from_triplets(rows.len(), cols.len(), t)
    }

    /// Row-major CSV with a header line.
    pub fn to_csv(&self, labels: &[String]) -> String {
        let mut s = String::new();
        s.push_str(&labels.join(","));
        s.push('\n');
        for r in self.to_dense() {
            let row: Vec<String> = r.iter().map(i64::to_string).collect();
            let _ = writeln!(s, "{}", row.join(","));
        }
        s
    }
}
