use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::localized::Localization;
use super::supports::sigma_of;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::fusion::{ExplicitData, FusionCategory, FusionRingElement};
use crate::ideals::buchberger;
use crate::poly::{parse_poly, MonomialOrder};
use crate::report::Report;
use crate::IntPoly;

/// Rep(S3) with simples `1, s, pi`.
pub fn rep_s3() -> Arc<FusionCategory> {
    let mut t = vec![[0, 0, 0, 1], [0, 1, 1, 1], [0, 2, 2, 1], [1, 0, 1, 1], [2, 0, 2, 1]];
    t.extend([[1, 1, 0, 1], [1, 2, 2, 1], [2, 1, 2, 1], [2, 2, 0, 1], [2, 2, 1, 1], [2, 2, 2, 1]]);
    FusionCategory::explicit(ExplicitData {
        labels: vec!["1".into(), "s".into(), "pi".into()],
        unit: 0,
        dual: vec![0, 1, 2],
        tensor: t,
    })
    .expect("Rep(S3) data is valid")
}

fn tp(text: &str) -> IntPoly {
    parse_poly::<BigInt>(text, &["t"]).expect("fixed expression")
}

/// `Phi: R(S3)[pi^-1] -> Z[t]/<1 - t - 2t^2>` with `Phi(s) = 1`,
/// `Phi(pi) = 2t + 1`, and the orders `{d > 0} ∪ {0}` and
/// `{[p] : p(1/2) > 0} ∪ {[0]}`.
pub fn s3_example_check(samples: usize, cfg: &Config) -> Result<Report> {
    let mut r = Report::new("s3", "K0(A(Rep(S3), pi)) = Z[t]/<1 - t - 2t^2> with cone p(1/2) > 0");
    let gb = buchberger(&[tp("1 - t - 2t^2").to_rational()], MonomialOrder::Grevlex)?;
    let eq = |a: &IntPoly, b: &IntPoly| gb.reduce(&(a - b).to_rational()).is_zero();
    let cat = rep_s3();
    let image = [tp("1"), tp("1"), tp("2t + 1")];
    let phi = |x: &FusionRingElement| -> IntPoly {
        let mut acc = IntPoly::zero(1);
        for i in x.support() {
            acc += &image[i].scale(x.coeff(i));
        }
        acc
    };
    let basis: Vec<FusionRingElement> = (0..3).map(|i| FusionRingElement::basis(&cat, i)).collect();
    for (a, b, name) in [(1, 1, "s s"), (1, 2, "s pi"), (2, 2, "pi pi")] {
        let prod = basis[a].mul(&basis[b])?;
        r.check(
            format!("Phi({name}) = Phi product"),
            eq(&phi(&prod), &(&image[a] * &image[b])),
        );
    }
    r.check("Phi(pi^2) = [2t + 3]", phi(&basis[2].mul(&basis[2])?) == tp("2t + 3"));
    r.check("Phi(1) = [1]", phi(&basis[0]) == tp("1"));
    r.check("[2t + 1][t] = [1]", eq(&(&tp("2t + 1") * &tp("t")), &tp("1")));

    // x / sigma^n with sigma = pi^2 maps to Phi(x) t^(2n)
    let loc = Localization::new(sigma_of(&cat, 2))?;
    let half = [BigRational::new(1.into(), 2.into())];
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (mut agree, mut unsure, mut unsure_ok) = (0, 0, 0);
    for _ in 0..samples {
        let c: Vec<i64> = (0..3).map(|_| rng.gen_range(-6..=6)).collect();
        let n = rng.gen_range(0..4u32);
        let x = loc.element(FusionRingElement::from_i64(&cat, &c)?, n)?;
        let p = &phi(x.numerator()) * &tp("t").pow(2 * n);
        let zero = gb.reduce(&p.to_rational()).is_zero();
        let v = p.eval_rational(&half);
        match x.is_positive(cfg) {
            Ok(pos) => {
                if pos == (zero || v.is_positive()) {
                    agree += 1;
                }
            }
            Err(Error::IndeterminateSign { .. }) => {
                unsure += 1;
                // a nonzero class with p(1/2) = 0 is outside the cone
                if v.is_zero() && !zero {
                    unsure_ok += 1;
                }
            }
            Err(e) => return Err(e),
        }
    }
    r.check_with(
        "d-cone corresponds to sign at t = 1/2",
        agree + unsure == samples && unsure == unsure_ok,
        format!("{agree} decided and agreeing, {unsure} with d = 0 exactly"),
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn warm_up_passes() {
        let r = s3_example_check(100, &Config::default()).unwrap();
        assert!(r.passed, "{}", r.to_json());
    }
}
