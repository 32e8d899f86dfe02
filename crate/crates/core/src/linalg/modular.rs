use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Montgomery arithmetic modulo an odd `p < 2^63`.
#[derive(Clone, Copy, Debug)]
pub struct Montgomery {
    pub p: u64,
    ninv: u64,
    r2: u64,
}

impl Montgomery {
    pub fn new(p: u64) -> Self {
        assert!(p % 2 == 1 && p < (1 << 63), "modulus must be odd and below 2^63");
        let mut inv: u64 = p;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = ((1u128 << 64) % p as u128) as u64;
        let r2 = ((r as u128 * r as u128) % p as u128) as u64;
        Montgomery {
            p,
            ninv: inv.wrapping_neg(),
            r2,
        }
    }

    #[inline]
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.ninv);
        let u = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    #[inline]
    pub fn to_mont(&self, a: u64) -> u64 {
        self.redc(a as u128 * self.r2 as u128)
    }

    #[inline]
    pub fn from_mont(&self, a: u64) -> u64 {
        self.redc(a as u128)
    }

    pub fn from_i64(&self, a: i64) -> u64 {
        let r = a.rem_euclid(self.p as i64) as u64;
        self.to_mont(r)
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.redc(a as u128 * b as u128)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn one(&self) -> u64 {
        self.to_mont(1)
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut acc = self.one();
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    /// Symmetric residue of a Montgomery value.
    pub fn to_signed(&self, a: u64) -> i128 {
        let v = self.from_mont(a) as i128;
        if v > (self.p / 2) as i128 {
            v - self.p as i128
        } else {
            v
        }
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// `count` distinct primes just below 2^61 drawn from a seeded generator.
pub fn random_primes(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hi = 1u64 << 61;
    let mut out: Vec<u64> = Vec::with_capacity(count);
    while out.len() < count {
        let mut c = rng.gen_range(hi - (1 << 52)..hi) | 1;
        while !is_prime(c) {
            c += 2;
        }
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let ps: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
        assert!(is_prime((1u64 << 61) - 1));
        assert!(!is_prime(3215031751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn montgomery_agrees_with_u128() {
        let p = (1u64 << 61) - 1;
        let m = Montgomery::new(p);
        let pairs = [(3u64, 5u64), (p - 1, p - 1), (123456789, 987654321987)];
        for (a, b) in pairs {
            let x = m.from_mont(m.mul(m.to_mont(a), m.to_mont(b)));
            assert_eq!(x, mulmod(a, b, p));
        }
        let a = m.to_mont(12345);
        assert_eq!(m.from_mont(m.mul(a, m.inv(a))), 1);
        assert_eq!(m.to_signed(m.from_i64(-7)), -7);
    }

    #[test]
    fn seeded_primes_are_reproducible() {
        let a = random_primes(7, 3);
        assert_eq!(a, random_primes(7, 3));
        assert!(a.iter().all(|&p| is_prime(p) && p < (1 << 61) && p > (1 << 60)));
        assert_ne!(a, random_primes(8, 3));
    }
}
