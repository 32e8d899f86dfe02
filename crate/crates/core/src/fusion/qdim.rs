use super::category::{FusionCategory, Source};
use super::element::FusionRingElement;
use super::smatrix::wzw_quantum_dims;
use crate::linalg::SparseMatrix;
use crate::numeric::{big_to_real, Real};

/// Quantum dimension of every simple. WZW data use the S-matrix column;
/// explicit data use the Perron-Frobenius vector of `sum_i N_i`.
pub fn quantum_dims<T: Real>(cat: &FusionCategory) -> Vec<T> {
    match cat.source() {
        Source::Wzw { group, level } => wzw_quantum_dims(group, level),
        Source::Explicit => explicit_dims(cat),
    }
}

fn explicit_dims<T: Real>(cat: &FusionCategory) -> Vec<T> {
    let n = cat.rank();
    let mut total = SparseMatrix::zeros(n, n);
    for i in 0..n {
        total = total.add(cat.matrix(i));
    }
    let mut v = vec![T::one(); n];
    for _ in 0..10_000 {
        let mut w = vec![T::zero(); n];
        for (r, wr) in w.iter_mut().enumerate() {
            for &(c, m) in total.row(r) {
                *wr = *wr + T::of_i64(m) * v[c];
            }
        }
        let u = w[cat.unit()];
        let next: Vec<T> = w.iter().map(|&x| x / u).collect();
        let delta = next.iter().zip(&v).fold(T::zero(), |a, (x, y)| a.max((*x - *y).abs()));
        v = next;
        if delta <= T::epsilon() * T::of(16.0) {
            break;
        }
    }
    v
}

/// `d(x) = sum_i x_i d(i)`.
pub fn quantum_dim<T: Real>(x: &FusionRingElement) -> T {
    let d = quantum_dims::<T>(x.category());
    x.coeffs()
        .iter()
        .zip(d)
        .fold(T::zero(), |a, (c, di)| a + big_to_real::<T>(c) * di)
}

/// Square root of the top eigenvalue of `M M^T`, which for a fusion matrix
/// is its Perron-Frobenius eigenvalue.
pub fn pf_eigenvalue_sym(m: &SparseMatrix) -> f64 {
    let n = m.rows();
    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut lambda = 0.0;
    for _ in 0..100_000 {
        // w = M M^T v
        let u = m.left_apply_f64(&v);
        let w = m.right_apply_f64(&u);
        let rq: f64 = w.iter().zip(&v).map(|(a, b)| a * b).sum();
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        v = w.iter().map(|x| x / norm).collect();
        if (rq - lambda).abs() <= 1e-16 * rq.abs() {
            lambda = rq;
            break;
        }
        lambda = rq;
    }
    lambda.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::ExplicitData;
    use crate::lie::GroupId;

    #[test]
    fn explicit_dims_match_wzw() {
        let c = FusionCategory::wzw(GroupId::A1, 4).unwrap();
        let n = c.rank();
        let mut t = vec![];
        for i in 0..n {
            for j in 0..n {
                for &(k, m) in c.matrix(i).row(j) {
                    t.push([i as i64, j as i64, k as i64, m]);
                }
            }
        }
        let e = FusionCategory::explicit(ExplicitData {
            labels: c.labels().to_vec(),
            unit: 0,
            dual: (0..n).collect(),
            tensor: t,
        })
        .unwrap();
        let a: Vec<f64> = quantum_dims(&c);
        let b: Vec<f64> = quantum_dims(&e);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-12, "{a:?} {b:?}");
        }
    }

    #[test]
    fn pf_of_su3_fundamental() {
        let c = FusionCategory::wzw(GroupId::A2, 5).unwrap();
        let d: Vec<f64> = quantum_dims(&c);
        assert!((pf_eigenvalue_sym(c.matrix(1)) - d[1]).abs() < 1e-9);
    }
}
