use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fusion::{quantum_dims, ExplicitData, FusionCategory};
use crate::lie::GroupId;
use crate::report::Report;

/// `Ver_1(SU(n))` as the group ring of `Z/n`: `rho_i rho_j = rho_(i+j)`.
pub fn cyclic_ring(n: usize) -> Result<Arc<FusionCategory>> {
    let mut tensor = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            tensor.push([i as i64, j as i64, ((i + j) % n) as i64, 1]);
        }
    }
    FusionCategory::explicit(ExplicitData {
        labels: (0..n).map(|i| format!("rho{}", i + 1)).collect(),
        unit: 0,
        dual: (0..n).map(|i| (n - i) % n).collect(),
        tensor,
    })
}

// All quantum dimensions are 1, so d is the coefficient sum.
fn d(x: &[i64]) -> i64 {
    x.iter().sum()
}

/// `a <= b` in the order with cone `{d > 0} ∪ {0}`.
fn leq(a: &[i64], b: &[i64]) -> bool {
    let diff: Vec<i64> = b.iter().zip(a).map(|(p, q)| p - q).collect();
    d(&diff) > 0 || diff.iter().all(|&v| v == 0)
}

/// No `x` with `h_i <= x <= g_j` for `h = (0, rho1 - rho2)` and
/// `g = (rho1, 2 rho1 - rho2)`, checked over every `x` with coefficients in
/// `[-bound, bound]`.
pub fn riesz_counterexample_search(n: usize, bound: i64) -> Result<Report> {
    if n < 2 {
        return Err(Error::Unsupported(format!("need n >= 2, got {n}")));
    }
    let mut r = Report::new(format!("riesz n={n}"), "K0 of Ver_1(SU(n)) with cone d > 0 fails Riesz interpolation");
    let e = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let sub = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(p, q)| p - q).collect::<Vec<_>>();
    let h = [vec![0; n], sub(&e(0), &e(1))];
    let g = [e(0), sub(&e(0).iter().map(|v| 2 * v).collect::<Vec<_>>(), &e(1))];
    let mut interval = true;
    for hi in &h {
        for gj in &g {
            interval &= leq(hi, gj);
        }
    }
    r.check("h_i <= g_j for all i, j", interval);
    r.check("h_1 and h_2 incomparable", !leq(&h[0], &h[1]) && !leq(&h[1], &h[0]));
    r.check("g_1 and g_2 incomparable", !leq(&g[0], &g[1]) && !leq(&g[1], &g[0]));

    let side = (2 * bound + 1) as usize;
    let total = side.pow(n as u32);
    let (mut found, mut above, mut below) = (0usize, 0usize, 0usize);
    let mut dichotomy = true;
    let mut x = vec![-bound; n];
    for _ in 0..total {
        let lower = h.iter().all(|hi| leq(hi, &x));
        let upper = g.iter().all(|gj| leq(&x, gj));
        if lower {
            above += 1;
            dichotomy &= d(&x) >= 1;
        }
        if upper {
            below += 1;
            dichotomy &= d(&x) <= 0;
        }
        if lower && upper {
            found += 1;
        }
        for v in x.iter_mut() {
            *v += 1;
            if *v <= bound {
                break;
            }
            *v = -bound;
        }
    }
    r.check_with(
        "above both h forces d >= 1, below both g forces d <= 0",
        dichotomy,
        format!("{above} above, {below} below"),
    );
    r.check_with("no interpolant", found == 0, format!("{total} candidates, {found} interpolants"));

    if n <= 3 {
        let cyc = cyclic_ring(n)?;
        let wzw = FusionCategory::wzw(if n == 2 { GroupId::A1 } else { GroupId::A2 }, 1)?;
        let same = (0..n).all(|i| cyc.matrix(i) == wzw.matrix(i));
        let ones = quantum_dims::<f64>(&wzw).iter().all(|v| (v - 1.0).abs() < 1e-12);
        r.check("cyclic ring equals Ver_1 from Kac-Walton", same && ones);
    }
    Ok(r)
}
