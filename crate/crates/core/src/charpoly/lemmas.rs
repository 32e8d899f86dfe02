use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{Config, Precision};
use crate::error::{Error, Result};
use crate::lie::{GroupId, Weight};
use crate::numeric::{cabs, root_of_unity, Real};
use crate::poly::Poly;
use crate::{Extended, IntPoly};

use super::qpoly::q_poly;
use super::subst::p_poly;

const A2: GroupId = GroupId::A2;

fn check_a2(lambda: &Weight) -> Result<()> {
    A2.check_rank(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant {
            weight: lambda.to_string(),
        });
    }
    Ok(())
}

fn p_or_zero(l: [i64; 2]) -> Result<IntPoly> {
    if l[0] < 0 || l[1] < 0 {
        Ok(Poly::zero(2))
    } else {
        p_poly(A2, &Weight::new(&l))
    }
}

fn mono(e: [i32; 2]) -> IntPoly {
    Poly::monomial(2, e, BigInt::from(1))
}

/// Compares `P_lambda` for SU(3) with the three-term recursion that lowers
/// `lambda_1` (or `lambda_2` when `lambda_1 = 0`).
pub fn p_recursion_check(lambda: &Weight) -> Result<bool> {
    check_a2(lambda)?;
    let [a, b] = lambda.coords();
    if a == 0 && b == 0 {
        return Err(Error::Unsupported("the recursion needs a nonzero weight".into()));
    }
    let rhs = if a >= 1 {
        p_or_zero([a - 1, b])? - &mono([1, 1]) * &p_or_zero([a - 1, b - 1])? - &mono([0, 1]) * &p_or_zero([a - 2, b + 1])?
    } else {
        p_or_zero([a, b - 1])? - &mono([1, 1]) * &p_or_zero([a - 1, b - 1])? - &mono([1, 0]) * &p_or_zero([a + 1, b - 2])?
    };
    Ok(rhs == p_poly(A2, lambda)?)
}

/// Leading coefficient one at `lambda`; every other monomial `x^a y^b`
/// obeys `a+2b <= l1+2l2`, `2a+b <= 2l1+l2`, `a+b < l1+l2` and
/// `a-b = l1-l2 mod 3`.
pub fn lemma6_support_check(lambda: &Weight) -> Result<bool> {
    check_a2(lambda)?;
    let q = q_poly(A2, lambda)?;
    let [l1, l2] = lambda.coords().map(|c| c as i32);
    if q.coeff(&[l1, l2]) != BigInt::from(1) {
        return Ok(false);
    }
    let ok = q.terms().filter(|(e, _)| **e != [l1, l2]).all(|(e, _)| {
        let [a, b] = *e;
        a + 2 * b <= l1 + 2 * l2 && 2 * a + b <= 2 * l1 + l2 && a + b < l1 + l2 && (a - b - l1 + l2).rem_euclid(3) == 0
    });
    Ok(ok)
}

/// `P_lambda(0,t) = P_{l1}(t)` and `P_lambda(s,0) = P_{l2}(s)` with the
/// SU(2) family on the right.
pub fn lemma_n_check(lambda: &Weight) -> Result<bool> {
    check_a2(lambda)?;
    let p = p_poly(A2, lambda)?;
    let su2 = |n: i64| p_poly(GroupId::A1, &Weight::new(&[n]));
    let at_s0 = p.filter(|e| e[0] == 0).map_exponents(1, |e| [e[1], 0]);
    let at_t0 = p.filter(|e| e[1] == 0).map_exponents(1, |e| [e[0], 0]);
    Ok(at_s0 == su2(lambda[0])? && at_t0 == su2(lambda[1])?)
}

fn weyl_residual<T: Real>(n: i64, m: i64, samples: usize, seed: u64) -> Result<T> {
    if n < 1 || m < 1 {
        return Err(Error::Unsupported(format!("identity needs n, m >= 1, got ({n},{m})")));
    }
    let q = q_poly(A2, &Weight::new(&[n - 1, m - 1]))?;
    const Q: i64 = 1 << 20;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let guard = T::of(1e-6);
    let mut worst = T::zero();
    let mut done = 0;
    let mut tries = 0;
    while done < samples {
        tries += 1;
        if tries > 100 * samples + 100 {
            return Err(Error::Internal("could not sample away from the singular set".into()));
        }
        let (p1, p2) = (rng.gen_range(0..Q), rng.gen_range(0..Q));
        // z1^a z2^b as an exact root of unity
        let z = |a: i64, b: i64| root_of_unity::<T>(a * p1 + b * p2, Q);
        let den = z(1, 1) - z(-1, -1) + z(1, -2) - z(2, -1) + z(-2, 1) - z(-1, 2);
        if cabs(&den) <= guard {
            continue;
        }
        let num = z(n, m) - z(-m, -n) + z(m, -(n + m)) - z(n + m, -m) + z(-(n + m), n) - z(-n, n + m);
        let rhs = num / den;
        let x = z(1, 0) + z(0, -1) + z(-1, 1);
        let y = z(-1, 0) + z(0, 1) + z(1, -1);
        let lhs: Complex<T> = q.eval_complex(&[x, y]);
        let err = cabs(&(lhs - rhs)) / (T::one() + cabs(&rhs));
        worst = worst.max(err);
        done += 1;
    }
    Ok(worst)
}

/// Largest relative deviation between `Q_{(n-1,m-1)}` at
/// `(z1 + 1/z2 + z2/z1, 1/z1 + z2 + z1/z2)` and the alternating Weyl
/// quotient, over `samples` random points of the torus.
pub fn weyl_character_residual(n: i64, m: i64, samples: usize, cfg: &Config) -> Result<f64> {
    match cfg.precision {
        Precision::Double => weyl_residual::<f64>(n, m, samples, cfg.seed),
        Precision::Extended => weyl_residual::<Extended>(n, m, samples, cfg.seed).map(|e| e.to_f64_lossy()),
    }
}

pub fn weyl_character_identity_check(n: i64, m: i64, samples: usize, cfg: &Config) -> Result<bool> {
    Ok(weyl_character_residual(n, m, samples, cfg)? <= cfg.character_tol)
}

/// `Q_lambda` is strictly positive at `(a + b/a + 1/b, 1/a + b + a/b)` for
/// `samples` rational points `(a, b)` in `(0.1, 10)^2`, evaluated exactly.
pub fn q_positivity_check(lambda: &Weight, samples: usize, seed: u64) -> Result<bool> {
    check_a2(lambda)?;
    let q = q_poly(A2, lambda)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = |n: i64| BigRational::new(n.into(), 1000.into());
    for _ in 0..samples {
        let a = r(rng.gen_range(101..10_000));
        let b = r(rng.gen_range(101..10_000));
        let x = &a + &b / &a + b.recip();
        let y = a.recip() + &b + &a / &b;
        let v = q.eval_rational(&[x, y]);
        if v.is_zero() || v.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::enumerate_simples;

    #[test]
    fn quoted_recursion_cases() {
        assert!(p_recursion_check(&Weight::new(&[2, 0])).unwrap());
        assert!(p_recursion_check(&Weight::new(&[1, 1])).unwrap());
        assert!(p_recursion_check(&Weight::new(&[0, 0])).is_err());
    }

    #[test]
    fn lemmas_hold_up_to_twelve() {
        for w in enumerate_simples(A2, 12) {
            if w.size() > 0 {
                assert!(p_recursion_check(&w).unwrap(), "{w}");
            }
            assert!(lemma6_support_check(&w).unwrap(), "{w}");
            assert!(lemma_n_check(&w).unwrap(), "{w}");
        }
    }

    #[test]
    fn weyl_identity_samples() {
        let cfg = Config::default();
        assert!(weyl_character_residual(1, 1, 10, &cfg).unwrap() < 1e-25);
        assert!(weyl_character_identity_check(2, 1, 100, &cfg).unwrap());
        assert!(weyl_character_identity_check(8, 8, 100, &cfg).unwrap());
        let f = Config::default().with_precision(Precision::Double);
        assert!(weyl_character_identity_check(3, 2, 50, &f).unwrap());
    }

    #[test]
    fn positivity_on_small_weights() {
        for w in enumerate_simples(A2, 4) {
            assert!(q_positivity_check(&w, 20, 3).unwrap(), "{w}");
        }
    }
}
