use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::category::FusionCategory;
use crate::error::{Error, Result};

/// Integer combination of simples in the fusion ring of one category.
#[derive(Clone)]
pub struct FusionRingElement {
    cat: Arc<FusionCategory>,
    coeffs: Vec<BigInt>,
}

impl PartialEq for FusionRingElement {
    fn eq(&self, o: &Self) -> bool {
        self.cat.same(&o.cat) && self.coeffs == o.coeffs
    }
}

impl Eq for FusionRingElement {}

impl FusionRingElement {
    pub fn zero(cat: &Arc<FusionCategory>) -> Self {
        FusionRingElement {
            cat: cat.clone(),
            coeffs: vec![BigInt::zero(); cat.rank()],
        }
    }

    pub fn unit(cat: &Arc<FusionCategory>) -> Self {
        Self::basis(cat, cat.unit())
    }

    pub fn basis(cat: &Arc<FusionCategory>, i: usize) -> Self {
        let mut e = Self::zero(cat);
        e.coeffs[i] = BigInt::one();
        e
    }

    pub fn from_coeffs(cat: &Arc<FusionCategory>, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != cat.rank() {
            return Err(Error::InvalidFusionData(format!(
                "expected {} coefficients, got {}",
                cat.rank(),
                coeffs.len()
            )));
        }
        Ok(FusionRingElement { cat: cat.clone(), coeffs })
    }

    pub fn from_i64(cat: &Arc<FusionCategory>, coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(cat, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn category(&self) -> &Arc<FusionCategory> {
        &self.cat
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.cat.same(&o.cat) {
            Ok(())
        } else {
            Err(Error::CategoryMismatch)
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        Ok(FusionRingElement { cat: self.cat.clone(), coeffs })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        Ok(FusionRingElement { cat: self.cat.clone(), coeffs })
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        FusionRingElement {
            cat: self.cat.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Product in the fusion ring.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let (x, y) = if self.support().len() <= o.support().len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut acc = vec![BigInt::zero(); self.coeffs.len()];
        for i in x.support() {
            // i * y
            let v = self.cat.matrix(i).left_apply_big(&y.coeffs);
            for (a, b) in acc.iter_mut().zip(v) {
                *a += &x.coeffs[i] * b;
            }
        }
        Ok(FusionRingElement { cat: self.cat.clone(), coeffs: acc })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::unit(&self.cat);
        for _ in 0..n {
            out = out.mul(self).expect("same category");
        }
        out
    }

    /// Image under the duality involution.
    pub fn dual(&self) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[self.cat.dual(i)] = c.clone();
        }
        FusionRingElement { cat: self.cat.clone(), coeffs }
    }
}

pub fn ring_product(x: &FusionRingElement, y: &FusionRingElement) -> Result<FusionRingElement> {
    x.mul(y)
}

impl fmt::Display for FusionRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in self.support() {
            let c = &self.coeffs[i];
            let l = &self.cat.labels()[i];
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let a = c.abs();
            if a.is_one() {
                write!(f, "{l}")?;
            } else {
                write!(f, "{a}*{l}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FusionRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{GroupId, Weight};

    #[test]
    fn su2_products() {
        let c = FusionCategory::wzw(GroupId::A1, 3).unwrap();
        let v1 = FusionRingElement::basis(&c, 1);
        assert_eq!(v1.pow(2).to_string(), "(0) + (2)");
        assert_eq!(v1.pow(3).to_string(), "2*(1) + (3)");
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = FusionCategory::wzw(GroupId::A1, 3).unwrap();
        let b = FusionCategory::wzw(GroupId::A1, 3).unwrap();
        let x = FusionRingElement::unit(&a);
        let y = FusionRingElement::unit(&b);
        assert_eq!(x.mul(&y), Err(Error::CategoryMismatch));
    }

    #[test]
    fn duality_on_su3() {
        let c = FusionCategory::wzw(GroupId::A2, 2).unwrap();
        let i = c.index_of(&Weight::new(&[1, 0])).unwrap();
        let j = c.index_of(&Weight::new(&[0, 1])).unwrap();
        let x = FusionRingElement::basis(&c, i);
        assert_eq!(x.dual(), FusionRingElement::basis(&c, j));
        // pi x pibar contains the unit once
        assert_eq!(x.mul(&x.dual()).unwrap().coeff(0), &BigInt::one());
    }
}
