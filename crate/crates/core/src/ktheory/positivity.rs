use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::Result;
use crate::ideals::{fundamental_qdims, fusion_ideal, presentation_basis};
use crate::lie::{GroupId, Weight};
use crate::numeric::Real;
use crate::poly::{MonomialOrder, Poly};
use crate::{Extended, LaurentPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tristate {
    Positive,
    NotPositive,
    Indeterminate,
}

/// Center grade of `x^a y^b`: parity of `a` for SU(2) and Sp(4), `a - b`
/// mod 3 for SU(3), trivial for G2.
pub fn monomial_grade(g: GroupId, e: &[i32; 2]) -> i64 {
    let w = Weight::from_parts([e[0] as i64, e[1] as i64], g.rank());
    g.center_grade(&w)
}

/// Splits a Laurent polynomial by center grade.
pub fn graded_parts(g: GroupId, p: &LaurentPoly) -> BTreeMap<i64, LaurentPoly> {
    let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
    for (e, c) in p.terms() {
        out.entry(monomial_grade(g, e))
            .or_insert_with(|| Poly::zero(g.rank()))
            .add_term(*e, c.clone());
    }
    out
}

/// Positivity of a Laurent polynomial in the fundamental classes, read as
/// an element of `Z[x^±1, y^±1] / J_k(G)`: each graded part is either zero
/// modulo `J_k` saturated by the variables or must evaluate positively at
/// the quantum dimensions.
pub fn center_graded_positivity(g: GroupId, k: i64, element: &LaurentPoly, cfg: &Config) -> Result<Tristate> {
    let ideal = fusion_ideal(g, k)?;
    let gb = presentation_basis(&ideal, MonomialOrder::Grevlex)?;
    let dim = gb.standard_monomials().count().unwrap_or(0);
    let point = fundamental_qdims::<Extended>(g, k)?;
    let unit_step: [i32; 2] = if g.rank() == 1 { [1, 0] } else { [1, 1] };
    let mut unsure = false;
    for part in graded_parts(g, element).into_values() {
        let low = part.min_exponents();
        let lift = [(-low[0]).max(0), (-low[1]).max(0)];
        let mut q = part.shift(&lift).to_rational();
        let mut zero = false;
        for _ in 0..=dim {
            q = gb.reduce(&q);
            if q.is_zero() {
                zero = true;
                break;
            }
            q = q.mul_monomial(&unit_step, &num_rational::BigRational::from_integer(1.into()));
        }
        if zero {
            continue;
        }
        let v = part.eval_real(&point).to_f64_lossy();
        let margin = cfg.sign_margin * (1.0 + part.l1_norm::<f64>());
        if v < -margin {
            return Ok(Tristate::NotPositive);
        }
        if v <= margin {
            unsure = true;
        }
    }
    Ok(if unsure { Tristate::Indeterminate } else { Tristate::Positive })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use num_bigint::BigInt;

    fn lp(s: &str, names: &[&str]) -> LaurentPoly {
        parse_poly::<BigInt>(s, names).unwrap()
    }

    #[test]
    fn su2_examples() {
        let cfg = Config::default();
        let x = ["x"];
        assert_eq!(center_graded_positivity(GroupId::A1, 2, &lp("x", &x), &cfg).unwrap(), Tristate::Positive);
        assert_eq!(center_graded_positivity(GroupId::A1, 2, &lp("0", &x), &cfg).unwrap(), Tristate::Positive);
        // d(3x - 1) > 0 but the even part is negative
        assert_eq!(center_graded_positivity(GroupId::A1, 2, &lp("3x - 1", &x), &cfg).unwrap(), Tristate::NotPositive);
        let mixed = lp("2x", &x) - lp("1", &x).shift(&[-2, 0]);
        assert_eq!(center_graded_positivity(GroupId::A1, 4, &mixed, &cfg).unwrap(), Tristate::NotPositive);
        // x^3 - 2x vanishes in Ver_2(SU(2)), so only the positive part counts
        let e = lp("x^3 - 2x + 1", &x);
        assert_eq!(center_graded_positivity(GroupId::A1, 2, &e, &cfg).unwrap(), Tristate::Positive);
    }

    #[test]
    fn su3_grading() {
        let xy = ["x", "y"];
        let parts = graded_parts(GroupId::A2, &lp("x + y + xy + 1", &xy));
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[&0], lp("xy + 1", &xy));
        let cfg = Config::default();
        assert_eq!(center_graded_positivity(GroupId::A2, 2, &lp("x - y", &xy), &cfg).unwrap(), Tristate::NotPositive);
        assert_eq!(center_graded_positivity(GroupId::G2, 1, &lp("x - 1", &xy), &cfg).unwrap(), Tristate::Positive);
    }
}
