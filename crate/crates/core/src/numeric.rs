//! Scalar abstraction and phase evaluation at rational multiples of a full turn.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar used by the numeric parts of the crate.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static {
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 converts")
    }

    fn of_i64(x: i64) -> Self {
        // i64 values beyond 2^53 are split so nothing is lost in f64.
        let hi = (x >> 26) << 26;
        Self::of(hi as f64) + Self::of((x - hi) as f64)
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Real for T where T: Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static {}

/// Converts a big integer into `T` with two limbs of double precision.
pub fn big_to_real<T: Real>(x: &BigInt) -> T {
    let hi = x.to_f64().unwrap_or(f64::INFINITY);
    if !hi.is_finite() {
        return T::of(hi);
    }
    let rest = x - BigInt::from_f64(hi).unwrap_or_default();
    T::of(hi) + T::of(rest.to_f64().unwrap_or(0.0))
}

fn taylor_sin_cos<T: Real>(x: T) -> (T, T) {
    let x2 = x * x;
    let mut s = x;
    let mut c = T::one();
    let mut ts = x;
    let mut tc = T::one();
    let eps = T::epsilon();
    for n in 1..60u32 {
        let a = T::of((2 * n) as f64);
        ts = -ts * x2 / (a * (a + T::one()));
        tc = -tc * x2 / ((a - T::one()) * a);
        s = s + ts;
        c = c + tc;
        if ts.abs() <= eps * s.abs() && tc.abs() <= eps {
            break;
        }
    }
    (s, c)
}

/// `(cos, sin)` of `2*pi*p/q`, reduced exactly to the first octant so the
/// series only ever sees arguments up to `pi/4`.
pub fn turn<T: Real>(p: i64, q: i64) -> (T, T) {
    assert!(q > 0, "turn denominator must be positive");
    let r = p.mod_floor(&q);
    // angle = (pi/2) * (4r/q); split off whole quadrants.
    let four_r = 4 * r as i128;
    let q128 = q as i128;
    let quadrant = (four_r / q128) as i64;
    let rem = (four_r % q128) as i64; // angle within quadrant = (pi/2) * rem/q
    let (c, s) = quarter_turn::<T>(rem, q);
    match quadrant {
        0 => (c, s),
        1 => (-s, c),
        2 => (-c, -s),
        _ => (s, -c),
    }
}

// cos/sin of (pi/2) * a/b with 0 <= a < b.
fn quarter_turn<T: Real>(a: i64, b: i64) -> (T, T) {
    if a == 0 {
        return (T::one(), T::zero());
    }
    let flip = 2 * a > b;
    let a = if flip { b - a } else { a };
    let x = T::FRAC_PI_2() * T::of_i64(a) / T::of_i64(b);
    let (s, c) = taylor_sin_cos(x);
    if flip {
        (s, c)
    } else {
        (c, s)
    }
}

/// `exp(2*pi*i*p/q)`.
pub fn root_of_unity<T: Real>(p: i64, q: i64) -> Complex<T> {
    let (c, s) = turn::<T>(p, q);
    Complex::new(c, s)
}

pub fn cabs<T: Real>(z: &Complex<T>) -> T {
    z.re.hypot(z.im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Extended;

    #[test]
    fn turn_matches_std_in_double() {
        for q in 1..40 {
            for p in -50..50 {
                let (c, s) = turn::<f64>(p, q);
                let a = 2.0 * std::f64::consts::PI * p.rem_euclid(q) as f64 / q as f64;
                assert!((c - a.cos()).abs() < 1e-14, "cos {p}/{q}");
                assert!((s - a.sin()).abs() < 1e-14, "sin {p}/{q}");
            }
        }
    }

    #[test]
    fn extended_turn_is_tight() {
        // cos^2 + sin^2 = 1 to double-double accuracy and cos(2pi/6) = 1/2.
        for q in [7i64, 11, 13, 97, 104] {
            for p in 0..q {
                let (c, s): (Extended, Extended) = turn(p, q);
                let err = (c * c + s * s - Extended::of(1.0)).abs();
                assert!(err < Extended::of(1e-28), "{p}/{q}");
            }
        }
        let (c, _): (Extended, Extended) = turn(1, 6);
        assert!((c - Extended::of(0.5)).abs() < Extended::of(1e-30));
        // sin(2pi/8) = sqrt(2)/2
        let (_, s): (Extended, Extended) = turn(1, 8);
        let h = Extended::of(0.5).sqrt();
        assert!((s - h).abs() < Extended::of(1e-30));
    }

    #[test]
    fn big_integer_conversion_keeps_low_bits() {
        let x = BigInt::from(1u64 << 60) + BigInt::from(3);
        let y: Extended = big_to_real(&x);
        let back = y - Extended::of((1u64 << 60) as f64);
        assert_eq!(back, Extended::of(3.0));
    }
}
