use num_complex::Complex;

use super::category::FusionCategory;
use super::smatrix::{smatrix, SMatrix};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::lie::{GroupId, Weight};
use crate::linalg::SparseMatrix;
use crate::numeric::{cabs, Real};

/// Fusion matrix of the simple at index `pi` from the Verlinde formula,
/// rounding each entry and rejecting any residue above `tol`.
pub fn verlinde_from_s<T: Real>(s: &SMatrix<T>, pi: usize, tol: f64) -> Result<SparseMatrix> {
    let n = s.n();
    // w[sigma] = S_{pi sigma} / S_{0 sigma}
    let w: Vec<Complex<T>> = (0..n).map(|c| s.ratio(pi, c)).collect();
    let mut trip = Vec::new();
    for nu in 0..n {
        let a: Vec<Complex<T>> = (0..n).map(|c| w[c] * s.get(nu, c)).collect();
        for mu in 0..n {
            let mut acc = Complex::new(T::zero(), T::zero());
            for c in 0..n {
                acc = acc + a[c] * s.get(mu, c).conj();
            }
            let r = acc.re.round();
            let residue = cabs(&(acc - Complex::new(r, T::zero()))).to_f64_lossy();
            if !(residue <= tol) {
                return Err(Error::IntegralityViolation { row: nu, col: mu, residue });
            }
            let v = r.to_f64_lossy() as i64;
            if v != 0 {
                trip.push((nu, mu, v));
            }
        }
    }
    Ok(SparseMatrix::from_triplets(n, n, trip))
}

pub fn fusion_matrix_verlinde<T: Real>(g: GroupId, k: i64, pi: &Weight, cfg: &Config) -> Result<SparseMatrix> {
    let s = smatrix::<T>(g, k, cfg)?;
    let i = s
        .weights
        .iter()
        .position(|w| w == pi)
        .ok_or_else(|| Error::Unsupported(format!("{pi} is not a level {k} weight")))?;
    verlinde_from_s(&s, i, cfg.integrality_tol)
}

/// Largest residual of `N_mu S_{., nu} = (S_{mu nu}/S_{0 nu}) S_{., nu}` over
/// the given `mu` and every column `nu`.
pub fn eigenvector_residual<T: Real>(s: &SMatrix<T>, cat: &FusionCategory, mus: &[usize]) -> T {
    let n = s.n();
    let mut worst = T::zero();
    for &mu in mus {
        let m = cat.matrix(mu);
        for nu in 0..n {
            let ev = s.ratio(mu, nu);
            for lam in 0..n {
                let mut acc = Complex::new(T::zero(), T::zero());
                for &(rho, c) in m.row(lam) {
                    acc = acc + s.get(rho, nu) * T::of_i64(c);
                }
                worst = worst.max(cabs(&(acc - ev * s.get(lam, nu))));
            }
        }
    }
    worst
}
