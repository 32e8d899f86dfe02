//! Sparse polynomials in one or two variables with exact coefficients.
//! Exponents are stored as `i32` so Laurent polynomials use the same type.

mod display;
mod order;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::numeric::{big_to_real, Real};

pub use order::MonomialOrder;
pub use parse::parse_poly;

/// Exponent vector; the second slot is zero for univariate polynomials.
pub type Mono = [i32; 2];

/// Exact coefficient ring.
pub trait Coeff: Clone + PartialEq + Eq + Signed + fmt::Display + fmt::Debug + Send + Sync + 'static {
    fn to_real<T: Real>(&self) -> T;
}

impl Coeff for BigInt {
    fn to_real<T: Real>(&self) -> T {
        big_to_real(self)
    }
}

impl Coeff for BigRational {
    fn to_real<T: Real>(&self) -> T {
        big_to_real::<T>(self.numer()) / big_to_real::<T>(self.denom())
    }
}

impl Coeff for i64 {
    fn to_real<T: Real>(&self) -> T {
        T::of_i64(*self)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    nvars: usize,
    terms: BTreeMap<Mono, C>,
}

pub fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    [a[0] + b[0], a[1] + b[1]]
}

pub fn mono_divides(a: &Mono, b: &Mono) -> bool {
    a[0] <= b[0] && a[1] <= b[1]
}

pub fn mono_lcm(a: &Mono, b: &Mono) -> Mono {
    [a[0].max(b[0]), a[1].max(b[1])]
}

pub fn mono_div(a: &Mono, b: &Mono) -> Mono {
    [a[0] - b[0], a[1] - b[1]]
}

pub fn mono_degree(a: &Mono) -> i64 {
    a[0] as i64 + a[1] as i64
}

impl<C: Coeff> Poly<C> {
    pub fn zero(nvars: usize) -> Self {
        assert!((1..=2).contains(&nvars), "one or two variables");
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(nvars, [0, 0], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn monomial(nvars: usize, e: Mono, c: C) -> Self {
        let mut p = Self::zero(nvars);
        debug_assert!(nvars == 2 || e[1] == 0);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// The variable with index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = [0, 0];
        e[i] = 1;
        Self::monomial(nvars, e, C::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Mono, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Mono, C)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, e: &Mono) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, e: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// All exponents are non-negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e[0] >= 0 && e[1] >= 0)
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(mono_degree).max()
    }

    /// Degree in variable `i` (`None` for the zero polynomial).
    pub fn degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn min_exponents(&self) -> Mono {
        let mut m = [0, 0];
        for e in self.terms.keys() {
            m[0] = m[0].min(e[0]);
            m[1] = m[1].min(e[1]);
        }
        m
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&[0, 0])
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (*e, a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Mono, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (mono_mul(e, m), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn shift(&self, m: &Mono) -> Self {
        self.mul_monomial(m, &C::one())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exchanges the two variables.
    pub fn swap_vars(&self) -> Self {
        assert_eq!(self.nvars, 2);
        Poly {
            nvars: 2,
            terms: self.terms.iter().map(|(e, c)| ([e[1], e[0]], c.clone())).collect(),
        }
    }

    /// Keeps the terms whose exponents satisfy `keep`.
    pub fn filter(&self, keep: impl Fn(&Mono) -> bool) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Re-embeds the terms with exponents mapped by `f`; colliding terms add.
    pub fn map_exponents(&self, nvars: usize, f: impl Fn(&Mono) -> Mono) -> Self {
        Poly::from_terms(nvars, self.terms.iter().map(|(e, c)| (f(e), c.clone())))
    }

    /// Substitutes old variable `i` by the monomial with exponent `images[i]`.
    pub fn substitute_monomials(&self, nvars: usize, images: &[Mono]) -> Self {
        self.map_exponents(nvars, |e| {
            let mut out = [0, 0];
            for (i, img) in images.iter().enumerate() {
                out[0] += e[i] * img[0];
                out[1] += e[i] * img[1];
            }
            out
        })
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn leading(&self, order: MonomialOrder) -> Option<(&Mono, &C)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<Mono> {
        self.leading(order).map(|(e, _)| *e)
    }

    /// Terms sorted in descending `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Mono, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn eval_real<T: Real>(&self, point: &[T]) -> T {
        let mut s = T::zero();
        for (e, c) in &self.terms {
            let mut t = c.to_real::<T>();
            for (i, &x) in point.iter().enumerate().take(self.nvars) {
                t = t * x.powi(e[i]);
            }
            s = s + t;
        }
        s
    }

    pub fn eval_complex<T: Real>(&self, point: &[Complex<T>]) -> Complex<T> {
        let mut s = Complex::new(T::zero(), T::zero());
        for (e, c) in &self.terms {
            let mut t = Complex::new(c.to_real::<T>(), T::zero());
            for (i, x) in point.iter().enumerate().take(self.nvars) {
                t = t * x.powi(e[i]);
            }
            s = s + t;
        }
        s
    }

    /// Sum of absolute values of the coefficients, as a real.
    pub fn l1_norm<T: Real>(&self) -> T {
        self.terms
            .values()
            .fold(T::zero(), |a, c| a + c.abs().to_real::<T>())
    }
}

impl Poly<BigInt> {
    pub fn to_rational(&self) -> Poly<BigRational> {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    pub fn from_i64(nvars: usize, terms: &[(Mono, i64)]) -> Self {
        Poly::from_terms(nvars, terms.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    /// Greatest common divisor of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Evaluates with exact rational arguments.
    pub fn eval_rational(&self, point: &[BigRational]) -> BigRational {
        self.to_rational().eval_exact(point)
    }
}

impl Poly<BigRational> {
    /// Clears denominators and content; returns the primitive integer
    /// polynomial with positive leading coefficient under `order`.
    pub fn primitive_part(&self, order: MonomialOrder) -> Poly<BigInt> {
        use num_integer::Integer;
        if self.is_zero() {
            return Poly::zero(self.nvars);
        }
        let l = self
            .terms
            .values()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let p = self.map_coeffs(|c| (c * BigRational::from_integer(l.clone())).to_integer());
        let g = p.content();
        let mut p = p.map_coeffs(|c| c / &g);
        if p.leading(order).map(|(_, c)| c.is_negative()).unwrap_or(false) {
            p = -p;
        }
        p
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: MonomialOrder) -> Self {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn eval_exact(&self, point: &[BigRational]) -> BigRational {
        let mut s = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate().take(self.nvars) {
                t *= num_traits::pow::Pow::pow(x, e[i]);
            }
            s += t;
        }
        s
    }

    /// Integer polynomial when every coefficient is integral.
    pub fn to_integer(&self) -> Option<Poly<BigInt>> {
        if self.terms.values().all(|c| c.is_integer()) {
            Some(self.map_coeffs(|c| c.to_integer()))
        } else {
            None
        }
    }
}

impl<C: Coeff> Poly<C> {
    /// Coefficient as `i64` if it fits (helper for tests and displays).
    pub fn coeff_i64(&self, e: &Mono) -> Option<i64>
    where
        C: ToPrimitive,
    {
        self.coeff(e).to_i64()
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, o: &Poly<C>) -> Poly<C> {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl<C: Coeff> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(mut self, o: Poly<C>) -> Poly<C> {
        self += &o;
        self
    }
}

impl<C: Coeff> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, o: &Poly<C>) {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        for (e, c) in &o.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<C: Coeff> SubAssign<&Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, o: &Poly<C>) {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        for (e, c) in &o.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, o: &Poly<C>) -> Poly<C> {
        let mut r = self.clone();
        r -= o;
        r
    }
}

impl<C: Coeff> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(mut self, o: Poly<C>) -> Poly<C> {
        self -= &o;
        self
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -self.clone()
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, o: &Poly<C>) -> Poly<C> {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut r = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                r.add_term(mono_mul(ea, eb), ca.clone() * cb.clone());
            }
        }
        r
    }
}

impl<C: Coeff> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, o: Poly<C>) -> Poly<C> {
        &self * &o
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntPoly;

    fn p(s: &str) -> IntPoly {
        parse_poly(s, &["x", "y"]).unwrap()
    }

    #[test]
    fn ring_arithmetic() {
        let a = p("x^2 - y");
        let b = p("x*y - 1");
        assert_eq!(&a * &b, p("x^3y - x^2 - xy^2 + y"));
        assert_eq!(&a - &a, IntPoly::zero(2));
        assert_eq!(a.pow(2), p("x^4 - 2x^2y + y^2"));
    }

    #[test]
    fn no_zero_terms_stored() {
        let a = p("x + y");
        let b = p("x - y");
        let s = &a - &b;
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn laurent_shift() {
        let a = p("x^2 + x");
        let b = a.shift(&[-2, 0]);
        assert!(!b.is_polynomial());
        assert_eq!(b.shift(&[2, 0]), a);
    }

    #[test]
    fn substitution_is_exponent_linear() {
        // x -> s t^-1, y -> t
        let a = p("x*y + y^2");
        let b = a.substitute_monomials(2, &[[1, -1], [0, 1]]);
        assert_eq!(b.coeff(&[1, 0]), BigInt::one());
        assert_eq!(b.coeff(&[0, 2]), BigInt::one());
    }

    #[test]
    fn primitive_part_strips_content() {
        let q = p("4x^2 - 6y").to_rational();
        assert_eq!(q.primitive_part(MonomialOrder::Grevlex), p("2x^2 - 3y"));
    }
}
