use super::category::FusionCategory;
use super::kac_walton::fusion_matrix_kw;
use super::qdim::{pf_eigenvalue_sym, quantum_dims};
use super::smatrix::smatrix;
use super::verlinde::{eigenvector_residual, fusion_matrix_verlinde};
use crate::config::{Config, Precision};
use crate::error::Result;
use crate::lie::{level, GroupId};
use crate::numeric::Real;
use crate::report::Report;
use crate::Extended;

/// Kac-Walton against the Verlinde formula for every fundamental simple.
pub fn dual_oracle_check(g: GroupId, k: i64, cfg: &Config) -> Result<Report> {
    let mut r = Report::new(format!("fusion {g} k={k}"), "Kac-Walton fusion rules equal the Verlinde formula");
    for pi in g.fundamentals() {
        if level(g, &pi)? > k {
            continue;
        }
        let kw = fusion_matrix_kw(g, k, &pi)?;
        let v = match cfg.precision {
            Precision::Double => fusion_matrix_verlinde::<f64>(g, k, &pi, cfg),
            Precision::Extended => fusion_matrix_verlinde::<Extended>(g, k, &pi, cfg),
        };
        match v {
            Ok(v) => r.check_with(format!("N_{pi}"), v == kw, format!("residues below {:e}", cfg.integrality_tol)),
            Err(e) => {
                r.fail(format!("N_{pi}"), e);
                false
            }
        };
    }
    Ok(r)
}

fn spectral<T: Real>(g: GroupId, k: i64, cfg: &Config, r: &mut Report) -> Result<()> {
    let s = smatrix::<T>(g, k, cfg)?;
    let cat = FusionCategory::wzw(g, k)?;
    let all: Vec<usize> = (0..cat.rank()).collect();
    let res = eigenvector_residual(&s, &cat, &all).to_f64_lossy();
    r.check_with("S columns are joint eigenvectors", res < cfg.eigen_tol, format!("{res:e}"));
    let d = quantum_dims::<T>(&cat);
    let mut worst = 0f64;
    for pi in g.fundamentals() {
        if let Some(i) = cat.index_of(&pi) {
            worst = worst.max((pf_eigenvalue_sym(cat.matrix(i)) - d[i].to_f64_lossy()).abs());
        }
    }
    r.check_with("quantum dimensions are Perron-Frobenius eigenvalues", worst < cfg.pf_tol, format!("{worst:e}"));
    Ok(())
}

/// Verlinde eigenvector residuals and Perron-Frobenius agreement.
pub fn spectral_check(g: GroupId, k: i64, cfg: &Config) -> Result<Report> {
    let mut r = Report::new(format!("spectral {g} k={k}"), "N_mu S_(.,nu) = (S_mu nu / S_0 nu) S_(.,nu), d = PF eigenvalue");
    match cfg.precision {
        Precision::Double => spectral::<f64>(g, k, cfg, &mut r)?,
        Precision::Extended => spectral::<Extended>(g, k, cfg, &mut r)?,
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_levels() {
        let cfg = Config::default();
        for g in GroupId::ALL {
            for k in 1..=3 {
                assert!(dual_oracle_check(g, k, &cfg).unwrap().passed);
                let s = spectral_check(g, k, &cfg).unwrap();
                assert!(s.passed, "{}", s.to_json());
            }
        }
    }
}
