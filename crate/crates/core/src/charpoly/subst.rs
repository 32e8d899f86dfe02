use crate::error::{Error, Result};
use crate::lie::{GroupId, Weight};
use crate::poly::{Mono, Poly};
use crate::{IntPoly, LaurentPoly};

use super::qpoly::q_poly;

/// Change of variables from `(x, y)` to `(s, t)`. `new_vars[i]` is the
/// exponent vector of the i-th new variable in the old ones; for SU(2) only
/// `t = x^-2` is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub group: GroupId,
    pub new_vars: [Mono; 2],
}

impl Substitution {
    pub fn of(g: GroupId) -> Self {
        let new_vars = match g {
            GroupId::A1 => [[-2, 0], [0, 0]],
            GroupId::A2 => [[1, -2], [-2, 1]],
            GroupId::C2 => [[0, -1], [2, -2]],
            GroupId::G2 => [[-1, 0], [-2, 1]],
        };
        Substitution { group: g, new_vars }
    }

    pub fn det(&self) -> i32 {
        let [s, t] = self.new_vars;
        if self.group.rank() == 1 {
            s[0]
        } else {
            s[0] * t[1] - t[0] * s[1]
        }
    }

    /// Exponents in the new variables of `x^a y^b`, when they are
    /// non-negative integers.
    pub fn solve(&self, e: &Mono) -> Option<Mono> {
        let d = self.det();
        let [s, t] = self.new_vars;
        let (ni, nj) = if self.group.rank() == 1 {
            (e[0], 0)
        } else {
            (e[0] * t[1] - t[0] * e[1], s[0] * e[1] - s[1] * e[0])
        };
        if ni % d != 0 || nj % d != 0 {
            return None;
        }
        let (i, j) = (ni / d, nj / d);
        (i >= 0 && j >= 0).then_some([i, j])
    }
}

/// Variable names of `Q_lambda`.
pub fn q_names(g: GroupId) -> &'static [&'static str] {
    if g.rank() == 1 {
        &["x"]
    } else {
        &["x", "y"]
    }
}

/// Variable names of `P_lambda`.
pub fn p_names(g: GroupId) -> &'static [&'static str] {
    if g.rank() == 1 {
        &["t"]
    } else {
        &["s", "t"]
    }
}

/// Monomial divided out of `Q_lambda` before changing variables.
pub fn divisor(g: GroupId, lambda: &Weight) -> Mono {
    let [a, b] = lambda.coords().map(|c| c as i32);
    match g {
        GroupId::A1 => [a, 0],
        GroupId::A2 => [a, b],
        GroupId::C2 => [0, a + b],
        GroupId::G2 => [a + 2 * b, 0],
    }
}

/// Rewrites a Laurent polynomial in `x, y` as a polynomial in `s, t`.
pub fn laurent_to_st(g: GroupId, m: &LaurentPoly) -> Result<IntPoly> {
    let sub = Substitution::of(g);
    let mut terms = Vec::with_capacity(m.len());
    for (e, c) in m.terms() {
        let ij = sub.solve(e).ok_or_else(|| Error::Inexpressible {
            exponents: e[..g.rank()].to_vec(),
        })?;
        terms.push((ij, c.clone()));
    }
    Ok(Poly::from_terms(g.rank(), terms))
}

/// Inverse of [`laurent_to_st`].
pub fn st_to_laurent(g: GroupId, p: &IntPoly) -> LaurentPoly {
    let sub = Substitution::of(g);
    let images: &[Mono] = if g.rank() == 1 {
        &sub.new_vars[..1]
    } else {
        &sub.new_vars
    };
    p.substitute_monomials(g.rank(), images)
}

/// `P_lambda(s, t)`: `Q_lambda` divided by its divisor monomial, then
/// rewritten in the new variables.
pub fn p_poly(g: GroupId, lambda: &Weight) -> Result<IntPoly> {
    let q = q_poly(g, lambda)?;
    let d = divisor(g, lambda);
    laurent_to_st(g, &q.shift(&[-d[0], -d[1]]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::enumerate_simples;
    use num_bigint::BigInt;

    fn mono(e: Mono) -> LaurentPoly {
        Poly::monomial(2, e, BigInt::from(1))
    }

    #[test]
    fn a2_monomials() {
        assert_eq!(laurent_to_st(GroupId::A2, &mono([-1, -1])).unwrap().render(&["s", "t"]), "st");
        assert_eq!(laurent_to_st(GroupId::A2, &mono([0, 0])).unwrap(), Poly::one(2));
        assert_eq!(
            laurent_to_st(GroupId::A2, &mono([1, 0])),
            Err(Error::Inexpressible { exponents: vec![1, 0] })
        );
        assert!(laurent_to_st(GroupId::A2, &mono([-1, 0])).is_err());
    }

    #[test]
    fn p_examples() {
        let r = |g, l: &[i64]| p_poly(g, &Weight::new(l)).unwrap().render(p_names(g));
        assert_eq!(r(GroupId::A2, &[2, 2]), "-s - t + 1");
        assert_eq!(r(GroupId::A1, &[4]), "t^2 - 3t + 1");
    }

    #[test]
    fn a1_p_recursion() {
        let t = Poly::var(1, 0);
        let p = |n| p_poly(GroupId::A1, &Weight::new(&[n])).unwrap();
        assert_eq!(p(0), Poly::one(1));
        assert_eq!(p(1), Poly::one(1));
        for n in 1..20 {
            assert_eq!(p(n + 1), &p(n) - &(&t * &p(n - 1)));
        }
    }

    #[test]
    fn round_trip_and_expressibility() {
        for g in GroupId::ALL {
            for w in enumerate_simples(g, 8) {
                if g == GroupId::C2 && w[0] % 2 == 1 {
                    assert!(p_poly(g, &w).is_err(), "{w}");
                    continue;
                }
                let p = p_poly(g, &w).unwrap();
                let d = divisor(g, &w);
                assert_eq!(st_to_laurent(g, &p).shift(&d), q_poly(g, &w).unwrap(), "{g} {w}");
            }
        }
    }

    #[test]
    fn p_swap_symmetry() {
        for w in enumerate_simples(GroupId::A2, 8) {
            assert_eq!(p_poly(GroupId::A2, &w).unwrap().swap_vars(), p_poly(GroupId::A2, &w.swapped()).unwrap());
        }
    }
}
