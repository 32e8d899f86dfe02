use num_bigint::BigInt;
use num_rational::BigRational;

use crate::charpoly::{p_poly, q_poly};
use crate::config::Config;
use crate::error::Result;
use crate::fusion::{character_ratio, smatrix, FusionCategory};
use crate::lie::{GroupId, Weight};
use crate::linalg::rational_rank;
use crate::numeric::{cabs, Real};
use crate::poly::{MonomialOrder, Poly};
use crate::report::Report;
use crate::{Extended, IntPoly, RatPoly};

use super::groebner::{buchberger, GroebnerBasis};
use super::presentation::{fusion_ideal, ik_ideal, IdealPresentation};

/// Reduced Groebner basis of a presentation.
pub fn presentation_basis(p: &IdealPresentation, order: MonomialOrder) -> Result<GroebnerBasis> {
    let gens: Vec<RatPoly> = p.generators.iter().map(IntPoly::to_rational).collect();
    buchberger(&gens, order)
}

/// Standard-monomial count of `I_k(G)` under grevlex (`None` when the
/// quotient is infinite-dimensional).
pub fn ik_quotient_dim(g: GroupId, k: i64) -> Result<Option<usize>> {
    let gb = presentation_basis(&ik_ideal(g, k)?, MonomialOrder::Grevlex)?;
    Ok(gb.standard_monomials().count())
}

/// The presentation of `Ver_k(G)` by `Z[x,y]/J_k(G)` with simples mapped to
/// the cosets of `Q_lambda`: quotient dimension, structure constants and
/// independence of the images.
pub fn verify_gepner_fuchs(g: GroupId, k: i64) -> Result<Report> {
    let mut r = Report::new(format!("gepner {g} k={k}"), "Ver_k(G) = Z[x]/J_k(G) with pi_lambda -> [Q_lambda]");
    let ideal = fusion_ideal(g, k)?;
    let gb = presentation_basis(&ideal, MonomialOrder::Grevlex)?;
    let cat = FusionCategory::wzw(g, k)?;
    let n = cat.rank();
    let std = gb.standard_monomials();
    r.check_with(
        "standard monomials = |Lambda|",
        std.count() == Some(n),
        format!("{:?} vs {n}", std.count()),
    );
    let qs: Vec<RatPoly> = cat.weights().iter().map(|w| q_poly(g, w).map(|q| q.to_rational())).collect::<Result<_>>()?;
    let nfs: Vec<RatPoly> = qs.iter().map(|q| gb.reduce(q)).collect();
    let mut bad = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let mut rhs = Poly::zero(g.rank());
            for &(c, m) in cat.matrix(a).row(b) {
                rhs += &nfs[c].scale(&BigRational::from_integer(BigInt::from(m)));
            }
            let lhs = gb.reduce(&(&qs[a] * &qs[b]));
            if lhs != rhs {
                bad.push(format!("({},{})", cat.labels()[a], cat.labels()[b]));
            }
        }
    }
    r.check_with(
        "structure constants",
        bad.is_empty(),
        if bad.is_empty() { format!("{} products", n * n) } else { bad.join(" ") },
    );
    if let Some(basis) = match &std {
        super::StandardMonomials::Finite(v) => Some(v.clone()),
        _ => None,
    } {
        let rows: Vec<Vec<BigRational>> = nfs.iter().map(|p| basis.iter().map(|e| p.coeff(e)).collect()).collect();
        let rank = rational_rank(&rows);
        r.check_with("normal forms independent", rank == n, format!("rank {rank}"));
    } else {
        r.check("normal forms independent", false);
    }
    Ok(r)
}

fn p_or_zero(l: [i64; 2]) -> Result<IntPoly> {
    if l[0] < 0 || l[1] < 0 {
        Ok(Poly::zero(2))
    } else {
        p_poly(GroupId::A2, &Weight::new(&l))
    }
}

/// `I_k = <P_(k+1,0), P_(k+2,0)>` equals the ideal of the `P_lambda` with
/// `|lambda| = k+1` over Q, together with the integer identities used to
/// pass between the two generating sets.
pub fn verify_lemma_generation(k: i64) -> Result<Report> {
    let mut r = Report::new(format!("generation k={k}"), "I_k generated by P_(k+1,0), P_(k+2,0) or by all P_lambda with |lambda| = k+1");
    let order = MonomialOrder::Grevlex;
    let ik = presentation_basis(&ik_ideal(GroupId::A2, k)?, order)?;
    let family: Vec<RatPoly> = (0..=k + 1)
        .map(|a| p_or_zero([a, k + 1 - a]).map(|p| p.to_rational()))
        .collect::<Result<_>>()?;
    let fam_gb = buchberger(&family, order)?;
    let missing: Vec<i64> = (0..=k + 1).filter(|&a| !ik.contains(&family[a as usize])).collect();
    r.check_with("level family inside I_k", missing.is_empty(), format!("{missing:?}"));
    let back = ik_ideal(GroupId::A2, k)?
        .generators
        .iter()
        .all(|g| fam_gb.contains(&g.to_rational()));
    r.check("I_k inside level family", back);

    let (s, t) = (Poly::var(2, 0), Poly::var(2, 1));
    let lhs = p_or_zero([k + 2, 0])?;
    let rhs = p_or_zero([k + 1, 0])? - &t * &p_or_zero([k, 1])?;
    r.check("P_(k+2,0) = P_(k+1,0) - t P_(k,1)", lhs == rhs);
    let lhs = p_or_zero([0, k + 1])?;
    let rhs = p_or_zero([1, k])? - &s * &p_or_zero([2, k - 1])?;
    r.check("P_(0,k+1) = P_(1,k) - s P_(2,k-1)", lhs == rhs);
    for j in 0..k {
        let lhs = &t * &p_or_zero([j, k + 1 - j])?;
        let rhs = p_or_zero([j + 1, k - j])? - p_or_zero([j + 2, k - j - 1])? + &s * &p_or_zero([j + 3, k - j - 2])?;
        r.check(format!("t P_({j},{}) identity", k + 1 - j), lhs == rhs);
    }
    Ok(r)
}

/// Every generator of `J_k(G)` vanishes on the points
/// `(S_{e_j lambda} / S_{0 lambda})_j`, and the quantum-dimension point is
/// one of them.
pub fn fusion_variety_check(g: GroupId, k: i64, cfg: &Config) -> Result<Report> {
    let mut r = Report::new(format!("variety {g} k={k}"), "J_k(G) vanishes on the fusion variety");
    let ideal = fusion_ideal(g, k)?;
    let s = smatrix::<Extended>(g, k, cfg)?;
    let cat = FusionCategory::wzw(g, k)?;
    let mut worst = 0f64;
    let mut points = Vec::new();
    for (li, lam) in cat.weights().iter().enumerate() {
        let mut pt = Vec::new();
        for e in g.fundamentals() {
            pt.push(match cat.index_of(&e) {
                Some(ei) => s.ratio(ei, li),
                None => character_ratio::<Extended>(g, k, &e, lam)?,
            });
        }
        for q in &ideal.generators {
            worst = worst.max(cabs(&q.eval_complex(&pt)).to_f64_lossy());
        }
        points.push(pt);
    }
    r.check_with("generators vanish", worst < cfg.variety_tol, format!("max |value| {worst:e}"));
    let d = &ideal.point;
    let hit = points.iter().any(|p| {
        p.iter()
            .zip(d)
            .all(|(z, &dj)| (z.re.to_f64_lossy() - dj).abs() < 1e-9 && z.im.to_f64_lossy().abs() < 1e-9)
    });
    r.check("quantum dimensions lie in V", hit);
    let mut at_d = 0f64;
    for q in &ideal.generators {
        at_d = at_d.max(q.eval_real(d).abs());
    }
    r.check_with("generators vanish at quantum dimensions", at_d < cfg.variety_tol, format!("{at_d:e}"));
    Ok(r)
}

/// Whether `x - y` lies in the ideal, as a Q statement.
pub fn congruent(x: &IntPoly, y: &IntPoly, gb: &GroebnerBasis) -> bool {
    gb.reduce(&(x - y).to_rational()).is_zero()
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gepner_small() {
        for (g, k) in [(GroupId::A1, 3), (GroupId::A2, 2), (GroupId::C2, 1), (GroupId::G2, 1)] {
            let r = verify_gepner_fuchs(g, k).unwrap();
            assert!(r.passed, "{g} {k}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn su3_level_one_square() {
        let gb = presentation_basis(&fusion_ideal(GroupId::A2, 1).unwrap(), MonomialOrder::Grevlex).unwrap();
        let q10 = q_poly(GroupId::A2, &Weight::new(&[1, 0])).unwrap();
        let q01 = q_poly(GroupId::A2, &Weight::new(&[0, 1])).unwrap();
        assert!(congruent(&(&q10 * &q10), &q01, &gb));
    }

    #[test]
    fn generation_small() {
        for k in 1..4 {
            let r = verify_lemma_generation(k).unwrap();
            assert!(r.passed, "{k}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn variety_small() {
        let cfg = Config::default();
        for g in GroupId::ALL {
            let r = fusion_variety_check(g, 2, &cfg).unwrap();
            assert!(r.passed, "{g}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }
}
