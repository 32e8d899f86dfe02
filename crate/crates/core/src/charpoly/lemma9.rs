use std::collections::HashMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{GroupId, Weight};
use crate::poly::Poly;
use crate::report::Report;
use crate::IntPoly;

use super::subst::p_poly;

/// Optional normalisation of the splitting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    None,
    /// `lambda_2` even: `deg A_j <= floor(l2/2) - 1` for `j > 0`, `B_j(0) = 0`.
    I,
    /// `lambda_1` even: `deg B_j <= floor(l1/2) - 1` for `j > 0`, `A_j(0) = 0`.
    II,
}

impl Variant {
    fn swapped(self) -> Variant {
        match self {
            Variant::None => Variant::None,
            Variant::I => Variant::II,
            Variant::II => Variant::I,
        }
    }
}

/// `(st)^j (A_j(s) + B_j(t))`; `a` and `b` are univariate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma9Term {
    pub j: usize,
    pub a: IntPoly,
    pub b: IntPoly,
}

type Split = Vec<(IntPoly, IntPoly)>;

fn zero1() -> IntPoly {
    Poly::zero(1)
}

fn get(v: &Split, j: isize) -> (IntPoly, IntPoly) {
    if j < 0 {
        return (zero1(), zero1());
    }
    v.get(j as usize).cloned().unwrap_or_else(|| (zero1(), zero1()))
}

fn trim(mut v: Split) -> Split {
    while v.len() > 1 && v.last().is_some_and(|(a, b)| a.is_zero() && b.is_zero()) {
        v.pop();
    }
    v
}

struct Builder {
    memo: HashMap<([i64; 2], Variant), Split>,
}

impl Builder {
    fn split(&mut self, l: [i64; 2], var: Variant) -> Split {
        if l[0] < 0 || l[1] < 0 {
            return Vec::new();
        }
        if let Some(s) = self.memo.get(&(l, var)) {
            return s.clone();
        }
        let out = self.build(l, var);
        self.memo.insert((l, var), out.clone());
        out
    }

    fn build(&mut self, l: [i64; 2], var: Variant) -> Split {
        let [l1, l2] = l;
        let one = || Poly::one(1);
        if l1 == 0 && l2 == 0 {
            return match var {
                Variant::II => vec![(zero1(), one())],
                _ => vec![(one(), zero1())],
            };
        }
        if l2 == 0 {
            // split P_(0,l1), then exchange s and t
            return self
                .split([0, l1], var.swapped())
                .into_iter()
                .map(|(a, b)| (b, a))
                .collect();
        }
        let (cv, gv) = match var {
            Variant::None => (Variant::None, Variant::None),
            Variant::I => (Variant::None, Variant::I),
            Variant::II => (Variant::II, Variant::None),
        };
        let cd = self.split([l1, l2 - 1], cv);
        let ef = self.split([l1 - 1, l2 - 1], Variant::None);
        let gh = self.split([l1 + 1, l2 - 2], gv);
        let n = cd.len().max(ef.len() + 1).max(gh.len() + 1);
        let s = Poly::var(1, 0);
        let mut out = Vec::with_capacity(n);
        for j in 0..n as isize {
            let (c, d) = get(&cd, j);
            let (e_prev, f_prev) = get(&ef, j - 1);
            let (g, h) = get(&gh, j);
            let (_, h_prev) = get(&gh, j - 1);
            let h0 = Poly::constant(1, h.constant_term());
            let a = c - e_prev - &s * &g - &s * &h0;
            let h_shift = (&h_prev - &Poly::constant(1, h_prev.constant_term())).shift(&[-1, 0]);
            let b = d - f_prev - h_shift;
            out.push((a, b));
        }
        match var {
            Variant::I => {
                for (a, b) in out.iter_mut() {
                    let c = Poly::constant(1, b.constant_term());
                    *a += &c;
                    *b -= &c;
                }
            }
            Variant::II if l1 >= 2 => {
                for (a, b) in out.iter_mut() {
                    let c = Poly::constant(1, a.constant_term());
                    *b += &c;
                    *a -= &c;
                }
            }
            _ => {}
        }
        trim(out)
    }
}

/// Splits `P_lambda(s,t)` for SU(3) as `sum_j (st)^j (A_j(s) + B_j(t))` by
/// induction on `|lambda|`, lowering `lambda_2` through the recursion.
pub fn lemma9_decompose(lambda: &Weight, variant: Variant) -> Result<Vec<Lemma9Term>> {
    GroupId::A2.check_rank(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant {
            weight: lambda.to_string(),
        });
    }
    let [l1, l2] = lambda.coords();
    match variant {
        Variant::I if l2 % 2 != 0 => return Err(Error::Unsupported(format!("variant I needs even l2, got {lambda}"))),
        Variant::II if l1 % 2 != 0 => return Err(Error::Unsupported(format!("variant II needs even l1, got {lambda}"))),
        _ => {}
    }
    let mut b = Builder { memo: HashMap::new() };
    Ok(b
        .split([l1, l2], variant)
        .into_iter()
        .enumerate()
        .map(|(j, (a, b))| Lemma9Term { j, a, b })
        .collect())
}

/// `sum_j (st)^j (A_j(s) + B_j(t))`.
pub fn reassemble(terms: &[Lemma9Term]) -> IntPoly {
    let mut p = Poly::zero(2);
    for t in terms {
        let j = t.j as i32;
        p += &t.a.map_exponents(2, |e| [e[0] + j, j]);
        p += &t.b.map_exponents(2, |e| [j, e[0] + j]);
    }
    p
}

fn deg(p: &IntPoly) -> i64 {
    p.degree_in(0).map_or(-1, i64::from)
}

/// Reassembly, the degree bounds and, where the parity allows, both
/// normalised variants.
pub fn lemma9_check(lambda: &Weight) -> Result<Report> {
    let mut r = Report::new(format!("lemma9 {lambda}"), "SU(3) splitting of P_lambda into A_j(s) and B_j(t)");
    let p = p_poly(GroupId::A2, lambda)?;
    let [l1, l2] = lambda.coords();
    let (ha, hb) = (l2 / 2, l1 / 2);
    let mut variants = vec![Variant::None];
    if l2 % 2 == 0 {
        variants.push(Variant::I);
    }
    if l1 % 2 == 0 {
        variants.push(Variant::II);
    }
    for v in variants {
        let terms = lemma9_decompose(lambda, v)?;
        r.check(format!("{v:?} reassembles"), reassemble(&terms) == p);
        let bounds = terms.iter().all(|t| deg(&t.a) <= ha && deg(&t.b) <= hb);
        r.check(format!("{v:?} degree bounds"), bounds);
        let extra = match v {
            Variant::None => true,
            Variant::I => terms
                .iter()
                .all(|t| t.b.constant_term().is_zero() && (t.j == 0 || deg(&t.a) <= ha - 1)),
            Variant::II => terms
                .iter()
                .all(|t| t.a.constant_term().is_zero() && (t.j == 0 || deg(&t.b) <= hb - 1)),
        };
        r.check(format!("{v:?} strengthened bounds"), extra);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::enumerate_simples;

    #[test]
    fn split_of_2_2() {
        let t = lemma9_decompose(&Weight::new(&[2, 2]), Variant::II).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].a.render(&["s"]), "-s");
        assert_eq!(t[0].b.render(&["t"]), "-t + 1");
        let t = lemma9_decompose(&Weight::new(&[0, 0]), Variant::None).unwrap();
        assert_eq!(reassemble(&t), Poly::one(2));
    }

    #[test]
    fn all_weights_up_to_twelve() {
        for w in enumerate_simples(GroupId::A2, 12) {
            let r = lemma9_check(&w).unwrap();
            assert!(r.passed, "{w}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn parity_is_enforced() {
        assert!(lemma9_decompose(&Weight::new(&[1, 1]), Variant::I).is_err());
        assert!(lemma9_decompose(&Weight::new(&[1, 2]), Variant::II).is_err());
    }
}
