use num_complex::Complex;

use super::category::enumerate_simples;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::lie::{root_system, GroupId, Weight};
use crate::numeric::{cabs, root_of_unity, Real};

/// Table of `exp(-2 pi i j / q)` for the phases appearing at one level.
struct PhaseTable<T> {
    q: i64,
    table: Vec<Complex<T>>,
}

impl<T: Real> PhaseTable<T> {
    fn new(g: GroupId, k: i64) -> Self {
        let q = root_system(g).denom * (k + g.dual_coxeter());
        let table = (0..q).map(|j| root_of_unity::<T>(-j, q)).collect();
        PhaseTable { q, table }
    }

    // Unnormalised Weyl sum over W for the pair (lambda, mu).
    fn raw(&self, g: GroupId, lambda: &Weight, mu: &Weight) -> Complex<T> {
        let rs = root_system(g);
        let a = *lambda + g.rho();
        let b = *mu + g.rho();
        let mut acc = Complex::new(T::zero(), T::zero());
        for w in &rs.weyl {
            let p = rs.ip_num(&rs.apply(w, &a), &b).rem_euclid(self.q) as usize;
            if w.det > 0 {
                acc = acc + self.table[p];
            } else {
                acc = acc - self.table[p];
            }
        }
        acc
    }
}

/// Kac-Peterson S-matrix over the simples of Rep_k(G), scaled to be unitary
/// with `S_00 > 0`.
#[derive(Clone, Debug)]
pub struct SMatrix<T> {
    pub group: GroupId,
    pub level: i64,
    pub weights: Vec<Weight>,
    entries: Vec<Complex<T>>,
    defect: T,
}

impl<T: Real> SMatrix<T> {
    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.entries[i * self.n() + j]
    }

    /// `max |S S^dagger - I|` entrywise.
    pub fn unitarity_defect(&self) -> T {
        self.defect
    }

    pub fn is_symmetric(&self, tol: T) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..i).all(|j| cabs(&(self.get(i, j) - self.get(j, i))) <= tol))
    }

    /// `S_{mu lambda} / S_{0 lambda}`.
    pub fn ratio(&self, mu: usize, lambda: usize) -> Complex<T> {
        self.get(mu, lambda) / self.get(0, lambda)
    }

    pub fn to_rows_f64(&self) -> Vec<Vec<[f64; 2]>> {
        let n = self.n();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let z = self.get(i, j);
                        [z.re.to_f64_lossy(), z.im.to_f64_lossy()]
                    })
                    .collect()
            })
            .collect()
    }
}

fn compute_defect<T: Real>(e: &[Complex<T>], n: usize) -> T {
    let mut worst = T::zero();
    for i in 0..n {
        for j in i..n {
            let mut acc = Complex::new(T::zero(), T::zero());
            for l in 0..n {
                acc = acc + e[i * n + l] * e[j * n + l].conj();
            }
            if i == j {
                acc = acc - Complex::new(T::one(), T::zero());
            }
            worst = worst.max(cabs(&acc));
        }
    }
    worst
}

/// Builds the S-matrix and fails if it is not unitary to `unitarity_tol`.
pub fn smatrix<T: Real>(g: GroupId, k: i64, cfg: &Config) -> Result<SMatrix<T>> {
    let weights = enumerate_simples(g, k);
    let n = weights.len();
    if n > cfg.verlinde_limit {
        return Err(Error::TooLarge {
            what: "S-matrix",
            size: n,
            limit: cfg.verlinde_limit,
        });
    }
    let phases = PhaseTable::<T>::new(g, k);
    let mut entries = Vec::with_capacity(n * n);
    for a in &weights {
        for b in &weights {
            entries.push(phases.raw(g, a, b));
        }
    }
    let norm = (0..n).fold(T::zero(), |s, j| {
        let z = entries[j];
        s + z.re * z.re + z.im * z.im
    });
    let r00 = entries[0];
    let a00 = cabs(&r00);
    let scale = r00.conj() / (a00 * norm.sqrt());
    for z in entries.iter_mut() {
        *z = *z * scale;
    }
    let defect = compute_defect(&entries, n);
    if !(defect.to_f64_lossy() <= cfg.unitarity_tol) {
        return Err(Error::PrecisionExhausted {
            defect: defect.to_f64_lossy(),
            tol: cfg.unitarity_tol,
        });
    }
    Ok(SMatrix {
        group: g,
        level: k,
        weights,
        entries,
        defect,
    })
}

/// `S_{mu lambda} / S_{0 lambda}` for any dominant `mu`, which need not lie
/// in the alcove; it is the Weyl character of `mu` at the point labelled by
/// `lambda`.
pub fn character_ratio<T: Real>(g: GroupId, k: i64, mu: &Weight, lambda: &Weight) -> Result<Complex<T>> {
    g.check_rank(mu)?;
    g.check_rank(lambda)?;
    let phases = PhaseTable::<T>::new(g, k);
    Ok(phases.raw(g, mu, lambda) / phases.raw(g, &g.zero(), lambda))
}

/// Quantum dimensions `S_{lambda 0} / S_{00}` over the simples, from the
/// first column only.
pub fn wzw_quantum_dims<T: Real>(g: GroupId, k: i64) -> Vec<T> {
    let phases = PhaseTable::<T>::new(g, k);
    let zero = g.zero();
    let r00 = phases.raw(g, &zero, &zero);
    enumerate_simples(g, k)
        .iter()
        .map(|w| (phases.raw(g, w, &zero) / r00).re)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Extended;

    #[test]
    fn su2_level_one() {
        let s = smatrix::<f64>(GroupId::A1, 1, &Config::default()).unwrap();
        let h = 0.5f64.sqrt();
        assert!((s.get(0, 0).re - h).abs() < 1e-14);
        assert!((s.get(1, 1).re + h).abs() < 1e-14);
        assert!(s.unitarity_defect() < 1e-14);
    }

    #[test]
    fn extended_precision_is_tighter() {
        let s = smatrix::<Extended>(GroupId::A2, 6, &Config::default()).unwrap();
        assert!(s.unitarity_defect().to_f64_lossy() < 1e-26);
        assert!(s.is_symmetric(Extended::of(1e-26)));
    }

    #[test]
    fn golden_ratio_for_g2_level_one() {
        let d = wzw_quantum_dims::<f64>(GroupId::G2, 1);
        assert!((d[1] - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-13);
    }

    #[test]
    fn wall_weight_has_zero_character() {
        // (0,1) sits on the alcove wall at level one for G2
        let z = character_ratio::<f64>(GroupId::G2, 1, &Weight::new(&[0, 1]), &Weight::new(&[0, 0])).unwrap();
        assert!(cabs(&z) < 1e-12);
    }

    #[test]
    fn size_guard() {
        let cfg = Config {
            verlinde_limit: 5,
            ..Config::default()
        };
        assert!(matches!(smatrix::<f64>(GroupId::A2, 3, &cfg), Err(Error::TooLarge { .. })));
    }
}
