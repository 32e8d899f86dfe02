use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::fusion::{quantum_dims, FusionCategory, FusionRingElement};
use num_traits::Float;
use crate::numeric::{big_to_real, Real};
use crate::Extended;

/// `F[sigma^-1]` for a non-negative `sigma` of positive quantum dimension.
#[derive(Debug)]
pub struct Localization {
    sigma: FusionRingElement,
    dims: Vec<Extended>,
}

impl Localization {
    pub fn new(sigma: FusionRingElement) -> Result<Arc<Self>> {
        if sigma.coeffs().iter().any(|c| c.is_negative()) {
            return Err(Error::Unsupported(format!("{sigma} has a negative coefficient")));
        }
        let dims = quantum_dims::<Extended>(sigma.category());
        let loc = Localization { sigma, dims };
        if !(loc.d(&loc.sigma) > Extended::zero()) {
            return Err(Error::Unsupported("d(sigma) must be positive".into()));
        }
        Ok(Arc::new(loc))
    }

    pub fn sigma(&self) -> &FusionRingElement {
        &self.sigma
    }

    pub fn category(&self) -> &Arc<FusionCategory> {
        self.sigma.category()
    }

    pub fn dims(&self) -> &[Extended] {
        &self.dims
    }

    /// `d(x)` from the quantum dimensions of the simples.
    pub fn d(&self, x: &FusionRingElement) -> Extended {
        x.coeffs()
            .iter()
            .zip(&self.dims)
            .fold(Extended::zero(), |a, (c, &d)| a + big_to_real::<Extended>(c) * d)
    }

    /// `x / sigma^n`.
    pub fn element(self: &Arc<Self>, x: FusionRingElement, n: u32) -> Result<LocalizedElement> {
        if !x.category().same(self.category()) {
            return Err(Error::CategoryMismatch);
        }
        Ok(LocalizedElement { loc: self.clone(), num: x, n })
    }

    pub fn one(self: &Arc<Self>) -> LocalizedElement {
        LocalizedElement {
            loc: self.clone(),
            num: FusionRingElement::unit(self.category()),
            n: 0,
        }
    }

    fn times_sigma_pow(&self, x: &FusionRingElement, n: u32) -> FusionRingElement {
        let mut out = x.clone();
        for _ in 0..n {
            out = self.sigma.mul(&out).expect("same category");
        }
        out
    }

    /// `sigma^N z = 0` for some `N <= |Lambda|`.
    fn saturates_to_zero(&self, z: &FusionRingElement) -> bool {
        let mut z = z.clone();
        for _ in 0..=self.category().rank() {
            if z.is_zero() {
                return true;
            }
            z = self.sigma.mul(&z).expect("same category");
        }
        false
    }
}

/// A fraction `num / sigma^n`.
#[derive(Clone)]
pub struct LocalizedElement {
    loc: Arc<Localization>,
    num: FusionRingElement,
    n: u32,
}

impl LocalizedElement {
    pub fn numerator(&self) -> &FusionRingElement {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.n
    }

    pub fn localization(&self) -> &Arc<Localization> {
        &self.loc
    }

    fn check(&self, o: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.loc, &o.loc) || self.loc.sigma == o.loc.sigma {
            Ok(())
        } else {
            Err(Error::CategoryMismatch)
        }
    }

    // Both numerators brought over the common denominator sigma^max(n, m).
    fn common(&self, o: &Self) -> (FusionRingElement, FusionRingElement, u32) {
        let n = self.n.max(o.n);
        (
            self.loc.times_sigma_pow(&self.num, n - self.n),
            self.loc.times_sigma_pow(&o.num, n - o.n),
            n,
        )
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let (a, b, n) = self.common(o);
        Ok(LocalizedElement { loc: self.loc.clone(), num: a.add(&b)?, n })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        LocalizedElement { loc: self.loc.clone(), num: self.num.neg(), n: self.n }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(LocalizedElement {
            loc: self.loc.clone(),
            num: self.num.mul(&o.num)?,
            n: self.n + o.n,
        })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        LocalizedElement { loc: self.loc.clone(), num: self.num.scale(c), n: self.n }
    }

    /// `x/sigma^n = y/sigma^m` iff `sigma^N (sigma^m x - sigma^n y) = 0`.
    pub fn equals(&self, o: &Self) -> Result<bool> {
        self.check(o)?;
        let (a, b, _) = self.common(o);
        Ok(self.loc.saturates_to_zero(&a.sub(&b)?))
    }

    pub fn is_zero(&self) -> bool {
        self.loc.saturates_to_zero(&self.num)
    }

    /// `d(x) / d(sigma)^n`.
    pub fn d_value(&self) -> Extended {
        self.loc.d(&self.num) / self.loc.d(&self.loc.sigma).powi(self.n as i32)
    }

    /// Membership in `{d > 0} ∪ {0}`. The sign of `d(x)` is trusted only
    /// beyond `sign_margin * (1 + |x|_1)`.
    pub fn is_positive(&self, cfg: &Config) -> Result<bool> {
        if self.is_zero() {
            return Ok(true);
        }
        let d = self.loc.d(&self.num).to_f64_lossy();
        let norm: f64 = self.num.coeffs().iter().map(|c| big_to_real::<f64>(&c.abs())).sum();
        let margin = cfg.sign_margin * (1.0 + norm);
        if d > margin {
            Ok(true)
        } else if d < -margin {
            Ok(false)
        } else {
            Err(Error::IndeterminateSign { value: d, margin })
        }
    }
}

impl fmt::Display for LocalizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / sigma^{}", self.num, self.n)
        }
    }
}

impl fmt::Debug for LocalizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ktheory::sigma_of;
    use crate::lie::GroupId;

    fn su2_2() -> (Arc<FusionCategory>, Arc<Localization>) {
        let cat = FusionCategory::wzw(GroupId::A1, 2).unwrap();
        let loc = Localization::new(sigma_of(&cat, 1)).unwrap();
        (cat, loc)
    }

    #[test]
    fn saturation_examples() {
        let (cat, loc) = su2_2();
        let x = FusionRingElement::from_i64(&cat, &[1, 2, 0]).unwrap();
        let a = loc.element(x.clone(), 0).unwrap();
        let b = loc.element(loc.sigma().mul(&x).unwrap(), 1).unwrap();
        assert!(a.equals(&b).unwrap());
        let s = loc.element(loc.sigma().clone(), 1).unwrap();
        assert!(s.equals(&loc.one()).unwrap());
        // (1 - pi_2) is killed by sigma = 1 + pi_2
        let k = loc.element(FusionRingElement::from_i64(&cat, &[1, 0, -1]).unwrap(), 0).unwrap();
        assert!(k.is_zero());
        assert!(!loc.one().is_zero());
    }

    #[test]
    fn positivity() {
        let (cat, loc) = su2_2();
        let cfg = Config::default();
        let p = loc.element(FusionRingElement::basis(&cat, 1), 1).unwrap();
        assert!(p.is_positive(&cfg).unwrap());
        assert!(!p.neg().is_positive(&cfg).unwrap());
        let zero = loc.element(FusionRingElement::from_i64(&cat, &[2, 0, -2]).unwrap(), 3).unwrap();
        assert!(zero.is_positive(&cfg).unwrap());
    }

    #[test]
    fn indeterminate_inside_margin() {
        // d(1 - pi_2) = 0, and sigma = pi_2 only negates it
        let cat = FusionCategory::wzw(GroupId::A1, 2).unwrap();
        let loc = Localization::new(FusionRingElement::basis(&cat, 2)).unwrap();
        let x = loc.element(FusionRingElement::from_i64(&cat, &[1, 0, -1]).unwrap(), 0).unwrap();
        assert!(!x.is_zero());
        assert!(matches!(x.is_positive(&Config::default()), Err(Error::IndeterminateSign { .. })));
    }

    #[test]
    fn ring_laws_on_small_cases() {
        let (cat, loc) = su2_2();
        let e = |c: &[i64], n| loc.element(FusionRingElement::from_i64(&cat, c).unwrap(), n).unwrap();
        let (a, b, c) = (e(&[1, -1, 2], 1), e(&[0, 3, 1], 0), e(&[2, 0, -1], 2));
        assert!(a.mul(&b).unwrap().equals(&b.mul(&a).unwrap()).unwrap());
        let l = a.mul(&b.add(&c).unwrap()).unwrap();
        let r = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        assert!(l.equals(&r).unwrap());
        assert!(a.mul(&loc.one()).unwrap().equals(&a).unwrap());
        assert!(a.sub(&a).unwrap().is_zero());
    }
}
