//! Double-double scalar. Arithmetic comes from `twofloat`, except that its
//! division drops the low word (`1/7` keeps only 53 bits), so quotients,
//! reciprocals and the machine epsilon are redone here.

use std::fmt;
use std::num::FpCategory;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_traits::{Float, FloatConst, FromPrimitive, Num, NumCast, One, ToPrimitive, Zero};
use twofloat::TwoFloat;

#[derive(Clone, Copy, Debug, Default, PartialEq, PartialOrd)]
pub struct Extended(pub TwoFloat);

impl Extended {
    pub fn hi(self) -> f64 {
        self.0.hi()
    }

    pub fn lo(self) -> f64 {
        self.0.lo()
    }
}

impl From<f64> for Extended {
    fn from(x: f64) -> Self {
        Extended(TwoFloat::from_f64(x))
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

fn quotient(x: TwoFloat, y: TwoFloat) -> TwoFloat {
    // Long division with three f64 digits.
    let q1 = x.hi() / y.hi();
    let r = x - y * q1;
    let q2 = r.hi() / y.hi();
    let r = r - y * q2;
    let q3 = r.hi() / y.hi();
    TwoFloat::new_add(q1, q2) + q3
}

macro_rules! binop {
    ($tr:ident, $f:ident, $e:expr) => {
        impl $tr for Extended {
            type Output = Extended;
            fn $f(self, o: Extended) -> Extended {
                let g: fn(TwoFloat, TwoFloat) -> TwoFloat = $e;
                Extended(g(self.0, o.0))
            }
        }
    };
}

binop!(Add, add, |a, b| a + b);
binop!(Sub, sub, |a, b| a - b);
binop!(Mul, mul, |a, b| a * b);
binop!(Div, div, quotient);
binop!(Rem, rem, |a, b| {
    let q = quotient(a, b).trunc();
    a - q * b
});

impl Neg for Extended {
    type Output = Extended;
    fn neg(self) -> Extended {
        Extended(-self.0)
    }
}

impl Zero for Extended {
    fn zero() -> Self {
        Extended(TwoFloat::from_f64(0.0))
    }
    fn is_zero(&self) -> bool {
        self.0.hi() == 0.0 && self.0.lo() == 0.0
    }
}

impl One for Extended {
    fn one() -> Self {
        Extended(TwoFloat::from_f64(1.0))
    }
}

impl Num for Extended {
    type FromStrRadixErr = <TwoFloat as Num>::FromStrRadixErr;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        TwoFloat::from_str_radix(s, radix).map(Extended)
    }
}

impl ToPrimitive for Extended {
    fn to_i64(&self) -> Option<i64> {
        self.0.to_i64()
    }
    fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
    fn to_f64(&self) -> Option<f64> {
        Some(self.0.hi() + self.0.lo())
    }
}

impl FromPrimitive for Extended {
    fn from_i64(n: i64) -> Option<Self> {
        TwoFloat::from_i64(n).map(Extended)
    }
    fn from_u64(n: u64) -> Option<Self> {
        TwoFloat::from_u64(n).map(Extended)
    }
    fn from_f64(n: f64) -> Option<Self> {
        Some(Extended(TwoFloat::from_f64(n)))
    }
}

impl NumCast for Extended {
    fn from<N: ToPrimitive>(n: N) -> Option<Self> {
        <TwoFloat as NumCast>::from(n).map(Extended)
    }
}

macro_rules! consts {
    ($($c:ident),*) => {
        impl FloatConst for Extended {
            $(fn $c() -> Self { Extended(<TwoFloat as FloatConst>::$c()) })*
        }
    };
}

consts!(
    E, FRAC_1_PI, FRAC_1_SQRT_2, FRAC_2_PI, FRAC_2_SQRT_PI, FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6,
    FRAC_PI_8, LN_10, LN_2, LOG10_E, LOG2_E, PI, SQRT_2
);

macro_rules! unary {
    ($($f:ident),*) => {
        $(fn $f(self) -> Self { Extended(Float::$f(self.0)) })*
    };
}

macro_rules! nullary {
    ($($f:ident),*) => {
        $(fn $f() -> Self { Extended(<TwoFloat as Float>::$f()) })*
    };
}

macro_rules! predicate {
    ($($f:ident),*) => {
        $(fn $f(self) -> bool { Float::$f(self.0) })*
    };
}

impl Float for Extended {
    nullary!(nan, infinity, neg_infinity, neg_zero, min_value, min_positive_value, max_value);
    predicate!(is_nan, is_infinite, is_finite, is_normal, is_sign_positive, is_sign_negative);
    unary!(
        floor, ceil, round, trunc, fract, abs, signum, sqrt, exp, exp2, ln, log2, log10, cbrt, sin, cos, tan, asin,
        acos, atan, exp_m1, ln_1p, sinh, cosh, tanh, asinh, acosh, atanh
    );

    fn epsilon() -> Self {
        Extended(TwoFloat::from_f64(2f64.powi(-104)))
    }

    fn classify(self) -> FpCategory {
        Float::classify(self.0)
    }

    fn mul_add(self, a: Self, b: Self) -> Self {
        self * a + b
    }

    fn recip(self) -> Self {
        Self::one() / self
    }

    fn powi(self, n: i32) -> Self {
        let mut acc = Self::one();
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    fn powf(self, n: Self) -> Self {
        Extended(Float::powf(self.0, n.0))
    }

    fn log(self, base: Self) -> Self {
        self.ln() / base.ln()
    }

    fn max(self, o: Self) -> Self {
        if self.is_nan() || o > self {
            o
        } else {
            self
        }
    }

    fn min(self, o: Self) -> Self {
        if self.is_nan() || o < self {
            o
        } else {
            self
        }
    }

    fn abs_sub(self, o: Self) -> Self {
        if self > o {
            self - o
        } else {
            Self::zero()
        }
    }

    fn hypot(self, o: Self) -> Self {
        (self * self + o * o).sqrt()
    }

    fn atan2(self, o: Self) -> Self {
        Extended(Float::atan2(self.0, o.0))
    }

    fn sin_cos(self) -> (Self, Self) {
        (self.sin(), self.cos())
    }

    fn integer_decode(self) -> (u64, i16, i8) {
        Float::integer_decode(self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Real;

    #[test]
    fn division_keeps_low_word() {
        let x = Extended::of(1.0) / Extended::of(7.0);
        let back = x * Extended::of(7.0) - Extended::one();
        assert!(back.abs() < Extended::of(1e-31), "{back:?}");
        let y = Extended::of(3.0).recip() * Extended::of(3.0) - Extended::one();
        assert!(y.abs() < Extended::of(1e-31));
    }

    #[test]
    fn sqrt_two() {
        let s = Extended::of(2.0).sqrt();
        assert!((s * s - Extended::of(2.0)).abs() < Extended::of(1e-31));
    }

    #[test]
    fn powi_and_remainder() {
        assert_eq!(Extended::of(2.0).powi(-2), Extended::of(0.25));
        assert_eq!(Extended::of(7.0) % Extended::of(3.0), Extended::of(1.0));
    }
}
