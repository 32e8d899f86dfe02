use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{mono_divides, mono_lcm, Mono, MonomialOrder, Poly};
use crate::RatPoly;

/// Sort key realising `order` on bivariate exponents; the map to keys is
/// injective, so each key determines its monomial.
fn key(order: MonomialOrder, e: &Mono) -> (i64, i64) {
    match order {
        MonomialOrder::Lex => (e[0] as i64, e[1] as i64),
        MonomialOrder::Grevlex => (e[0] as i64 + e[1] as i64, -(e[1] as i64)),
    }
}

fn unkey(order: MonomialOrder, k: (i64, i64)) -> Mono {
    match order {
        MonomialOrder::Lex => [k.0 as i32, k.1 as i32],
        MonomialOrder::Grevlex => [(k.0 + k.1) as i32, (-k.1) as i32],
    }
}

/// Polynomial kept sorted by the monomial order, so the leading term is
/// the last entry.
struct Ordered {
    order: MonomialOrder,
    terms: BTreeMap<(i64, i64), BigRational>,
}

impl Ordered {
    fn new(p: &RatPoly, order: MonomialOrder) -> Self {
        Ordered {
            order,
            terms: p.terms().map(|(e, c)| (key(order, e), c.clone())).collect(),
        }
    }

    /// `self -= c * x^m * g`.
    fn sub_scaled(&mut self, c: &BigRational, m: &Mono, g: &RatPoly) {
        for (e, a) in g.terms() {
            let k = key(self.order, &[e[0] + m[0], e[1] + m[1]]);
            let d = c * a;
            match self.terms.entry(k) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(-d);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() -= d;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
    }
}

/// Remainder of `p` on division by `basis` (each entry monic with leading
/// monomial `lms[i]`), reducing every term.
fn reduce(p: &RatPoly, basis: &[RatPoly], lms: &[Mono], order: MonomialOrder) -> RatPoly {
    let mut work = Ordered::new(p, order);
    let mut rem = Poly::zero(p.nvars());
    while let Some((k, c)) = work.terms.pop_last() {
        let e = unkey(order, k);
        match lms.iter().position(|l| mono_divides(l, &e)) {
            Some(i) => {
                let m = [e[0] - lms[i][0], e[1] - lms[i][1]];
                // the leading term cancels against the one just popped
                let lead = basis[i].coeff(&lms[i]);
                let c = if lead.is_one() { c } else { c / lead };
                for (ge, a) in basis[i].terms() {
                    if *ge == lms[i] {
                        continue;
                    }
                    let kk = key(order, &[ge[0] + m[0], ge[1] + m[1]]);
                    let d = &c * a;
                    let slot = work.terms.entry(kk).or_insert_with(BigRational::zero);
                    *slot -= d;
                    if slot.is_zero() {
                        work.terms.remove(&kk);
                    }
                }
            }
            None => rem.add_term(e, c),
        }
    }
    rem
}

fn monic(p: &RatPoly, order: MonomialOrder) -> RatPoly {
    p.monic(order)
}

/// Reduced Groebner basis over Q, sorted by descending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub nvars: usize,
    #[serde(skip)]
    gens: Vec<RatPoly>,
}

/// Dimension of the quotient ring over Q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StandardMonomials {
    Finite(Vec<Mono>),
    Infinite,
}

impl StandardMonomials {
    pub fn count(&self) -> Option<usize> {
        match self {
            StandardMonomials::Finite(v) => Some(v.len()),
            StandardMonomials::Infinite => None,
        }
    }
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[RatPoly] {
        &self.gens
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.gens.iter().map(|g| g.leading_monomial(self.order).unwrap()).collect()
    }

    /// Unique remainder of `p`.
    pub fn reduce(&self, p: &RatPoly) -> RatPoly {
        reduce(p, &self.gens, &self.leading_monomials(), self.order)
    }

    pub fn contains(&self, p: &RatPoly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Whether this is the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].total_degree() == Some(0)
    }

    /// Monomials outside the leading-term ideal, in ascending order.
    pub fn standard_monomials(&self) -> StandardMonomials {
        let lms = self.leading_monomials();
        let pure = |i: usize| {
            lms.iter()
                .filter(|l| (0..self.nvars).all(|j| j == i || l[j] == 0))
                .map(|l| l[i])
                .min()
        };
        let mut bounds = [1, 1];
        for (i, b) in bounds.iter_mut().enumerate().take(self.nvars) {
            match pure(i) {
                Some(d) => *b = d,
                None => return StandardMonomials::Infinite,
            }
        }
        let mut out = Vec::new();
        for a in 0..bounds[0] {
            for b in 0..bounds[1] {
                let e = [a, b];
                if !lms.iter().any(|l| mono_divides(l, &e)) {
                    out.push(e);
                }
            }
        }
        out.sort_by(|x, y| self.order.cmp(x, y));
        StandardMonomials::Finite(out)
    }
}

/// Buchberger's algorithm with the normal selection strategy (pairs taken
/// by smallest lcm, ties by index) and the coprime-leading-term criterion.
pub fn buchberger(gens: &[RatPoly], order: MonomialOrder) -> Result<GroebnerBasis> {
    let Some(first) = gens.first() else {
        return Err(Error::Unsupported("Groebner basis of the empty generator list".into()));
    };
    let nvars = first.nvars();
    if gens.iter().any(|g| g.nvars() != nvars) {
        return Err(Error::Unsupported("generators live in different rings".into()));
    }
    if gens.iter().any(|g| !g.is_polynomial()) {
        return Err(Error::Unsupported("generators must have non-negative exponents".into()));
    }
    let mut basis: Vec<RatPoly> = Vec::new();
    let mut lms: Vec<Mono> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let push = |p: RatPoly, basis: &mut Vec<RatPoly>, lms: &mut Vec<Mono>, pairs: &mut Vec<(usize, usize)>| {
        let p = monic(&primitive(&p, order), order);
        let idx = basis.len();
        lms.push(p.leading_monomial(order).unwrap());
        basis.push(p);
        for i in 0..idx {
            pairs.push((i, idx));
        }
    };
    for g in gens {
        let r = reduce(g, &basis, &lms, order);
        if !r.is_zero() {
            push(r, &mut basis, &mut lms, &mut pairs);
        }
    }
    while !pairs.is_empty() {
        let (pos, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = mono_lcm(&lms[a.0], &lms[a.1]);
                let lb = mono_lcm(&lms[b.0], &lms[b.1]);
                order.cmp(&la, &lb).then(a.cmp(b))
            })
            .unwrap();
        let (i, j) = pairs.remove(pos);
        let (li, lj) = (lms[i], lms[j]);
        if li[0].min(lj[0]) == 0 && li[1].min(lj[1]) == 0 {
            continue;
        }
        let l = mono_lcm(&li, &lj);
        let mut sp = Ordered::new(&basis[i].shift(&[l[0] - li[0], l[1] - li[1]]), order);
        sp.sub_scaled(&BigRational::one(), &[l[0] - lj[0], l[1] - lj[1]], &basis[j]);
        let sp = Poly::from_terms(nvars, sp.terms.into_iter().map(|(k, c)| (unkey(order, k), c)));
        let r = reduce(&sp, &basis, &lms, order);
        if !r.is_zero() {
            push(r, &mut basis, &mut lms, &mut pairs);
        }
    }
    Ok(GroebnerBasis {
        order,
        nvars,
        gens: interreduce(basis, order),
    })
}

/// Strips content so coefficients stay small, keeping the rational type.
fn primitive(p: &RatPoly, order: MonomialOrder) -> RatPoly {
    p.primitive_part(order).to_rational()
}

fn interreduce(basis: Vec<RatPoly>, order: MonomialOrder) -> Vec<RatPoly> {
    let lm = |p: &RatPoly| p.leading_monomial(order).unwrap();
    // minimal basis: drop elements whose leading monomial another divides
    let mut minimal: Vec<RatPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let e = lm(g);
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let f = lm(h);
            j != i && mono_divides(&f, &e) && (f != e || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<RatPoly> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let olms: Vec<Mono> = others.iter().map(lm).collect();
        let head = lm(&minimal[i]);
        let tail = minimal[i].filter(|e| *e != head);
        let r = &Poly::monomial(minimal[i].nvars(), head, BigRational::one()) + &reduce(&tail, &others, &olms, order);
        out.push(monic(&r, order));
    }
    out.sort_by(|a, b| order.cmp(&lm(b), &lm(a)));
    out
}

/// Remainder of `p` modulo `gb`, refusing a basis computed for a different
/// order.
pub fn normal_form(p: &RatPoly, gb: &GroebnerBasis, order: MonomialOrder) -> Result<RatPoly> {
    if order != gb.order {
        return Err(Error::OrderMismatch);
    }
    if p.nvars() != gb.nvars {
        return Err(Error::Unsupported("polynomial and basis live in different rings".into()));
    }
    Ok(gb.reduce(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn rp(s: &str) -> RatPoly {
        parse_poly(s, &["x", "y"]).unwrap()
    }

    fn gb(gens: &[&str]) -> GroebnerBasis {
        buchberger(&gens.iter().map(|s| rp(s)).collect::<Vec<_>>(), MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn single_generator() {
        let b = gb(&["x^2-1"]);
        assert_eq!(b.generators(), &[rp("x^2-1")]);
        let g = normal_form(&rp("x^3"), &b, MonomialOrder::Grevlex).unwrap();
        assert_eq!(g, rp("x"));
        assert_eq!(normal_form(&rp("1"), &b, MonomialOrder::Grevlex).unwrap(), rp("1"));
        assert!(b.contains(&rp("x^2-1")));
        assert_eq!(normal_form(&rp("x"), &b, MonomialOrder::Lex), Err(Error::OrderMismatch));
    }

    #[test]
    fn three_point_quotient() {
        // x^2 = y, xy = 1: x^3 = 1 and y = x^2, three points
        let b = gb(&["x^2-y", "xy-1"]);
        assert_eq!(b.standard_monomials().count(), Some(3));
        let lex = buchberger(&[rp("x^2-y"), rp("xy-1")], MonomialOrder::Lex).unwrap();
        assert_eq!(lex.standard_monomials().count(), Some(3));
    }

    #[test]
    fn infinite_quotient_and_unit_ideal() {
        assert_eq!(gb(&["xy"]).standard_monomials(), StandardMonomials::Infinite);
        let u = gb(&["x", "x-1"]);
        assert!(u.is_unit());
        assert_eq!(u.standard_monomials().count(), Some(0));
    }

    #[test]
    fn permutation_invariance() {
        let a = gb(&["x^3-2xy+1", "x^2-y", "y^3-x"]);
        let b = gb(&["y^3-x", "x^3-2xy+1", "x^2-y"]);
        assert_eq!(a.generators(), b.generators());
    }

    #[test]
    fn basis_is_closed_under_s_pairs() {
        let b = gb(&["x^3-2xy+1", "x^2y-y^2-x"]);
        let gs = b.generators();
        for i in 0..gs.len() {
            for j in i + 1..gs.len() {
                let (li, lj) = (gs[i].leading_monomial(b.order).unwrap(), gs[j].leading_monomial(b.order).unwrap());
                let l = mono_lcm(&li, &lj);
                let sp = &gs[i].shift(&[l[0] - li[0], l[1] - li[1]]) - &gs[j].shift(&[l[0] - lj[0], l[1] - lj[1]]);
                assert!(b.contains(&sp));
            }
        }
    }
}
