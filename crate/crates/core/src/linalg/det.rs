use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::modular::{random_primes, Montgomery};
use super::rank::eliminate;
use super::sparse::SparseMatrix;
use crate::error::{Error, Result};

const BAREISS_LIMIT: usize = 512;

/// Fraction-free Gaussian elimination.
pub fn det_bareiss(m: &SparseMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = m
        .to_dense()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign < 0 { -d } else { d })
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for i in 0..perm.len() {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

fn det_mod(m: &SparseMatrix, p: u64) -> u64 {
    let mont = Montgomery::new(p);
    let e = eliminate(m, &mont);
    if e.rank < m.rows() {
        return 0;
    }
    let mut perm = vec![0; m.rows()];
    let mut acc = mont.one();
    for (c, piv) in e.pivots.iter().enumerate() {
        let (origin, lead) = piv.expect("full rank has every pivot");
        perm[c] = origin;
        acc = mont.mul(acc, lead);
    }
    let v = mont.from_mont(acc);
    if permutation_sign(&perm) < 0 {
        (p - v) % p
    } else {
        v
    }
}

/// Multi-modular determinant with Chinese remaindering up to twice the
/// Hadamard bound.
pub fn det_modular(m: &SparseMatrix, seed: u64) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let log2_bound: f64 = (0..m.rows())
        .map(|i| {
            let s: f64 = m.row(i).iter().map(|e| (e.1 as f64).powi(2)).sum();
            if s > 0.0 {
                0.5 * s.log2()
            } else {
                0.0
            }
        })
        .sum();
    let count = ((log2_bound + 2.0) / 60.0).ceil().max(1.0) as usize;
    let primes = random_primes(seed, count);
    let mut modulus = BigInt::one();
    let mut value = BigInt::zero();
    for &p in &primes {
        let r = BigInt::from(det_mod(m, p));
        let pb = BigInt::from(p);
        // value' = value + modulus * ((r - value) * modulus^-1 mod p)
        let inv = mod_inverse(&(&modulus % &pb), &pb);
        let t = ((&r - &value) * inv).mod_floor(&pb);
        value += &modulus * t;
        modulus *= pb;
    }
    let half = &modulus >> 1;
    if value > half {
        value -= &modulus;
    }
    Ok(value)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Exact determinant: Bareiss up to 512 rows, multi-modular above.
pub fn exact_det(m: &SparseMatrix) -> Result<BigInt> {
    if m.rows() <= BAREISS_LIMIT {
        det_bareiss(m)
    } else {
        det_modular(m, 0x0de7)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_determinants() {
        assert_eq!(exact_det(&SparseMatrix::identity(4)).unwrap(), BigInt::one());
        let m = SparseMatrix::from_dense(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(exact_det(&m).unwrap(), BigInt::from(-1));
        let m = SparseMatrix::from_dense(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]);
        assert_eq!(exact_det(&m).unwrap(), BigInt::from(18));
        assert!(exact_det(&SparseMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn modular_matches_bareiss() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for n in 1..12 {
            let d: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-9..10)).collect()).collect();
            let m = SparseMatrix::from_dense(&d);
            assert_eq!(det_modular(&m, 1).unwrap(), det_bareiss(&m).unwrap(), "n={n}");
        }
        let big = SparseMatrix::from_dense(&[vec![1_000_000_007, 3], vec![5, 1_000_000_009]]);
        assert_eq!(
            det_modular(&big, 2).unwrap(),
            BigInt::from(1_000_000_007i64) * 1_000_000_009i64 - 15
        );
    }

    #[test]
    fn sign_of_permutations() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0]), 1);
    }
}
