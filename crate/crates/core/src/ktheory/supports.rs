use num_traits::Signed;

use crate::error::{Error, Result};
use crate::fusion::{FusionCategory, FusionRingElement};

fn check_nonnegative(sigma: &FusionRingElement) -> Result<()> {
    if sigma.coeffs().iter().any(|c| c.is_negative()) {
        return Err(Error::Unsupported(format!("{sigma} has a negative coefficient")));
    }
    Ok(())
}

/// One step of `x -> sigma x` on supports of non-negative elements.
pub(crate) fn step_support(cat: &FusionCategory, sigma: &FusionRingElement, set: &[bool]) -> Vec<bool> {
    let mut out = vec![false; set.len()];
    for i in sigma.support() {
        let m = cat.matrix(i);
        for (nu, &on) in set.iter().enumerate() {
            if on {
                for &(mu, c) in m.row(nu) {
                    if c > 0 {
                        out[mu] = true;
                    }
                }
            }
        }
    }
    out
}

fn indices(set: &[bool]) -> Vec<usize> {
    set.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
}

/// Simples occurring in `sigma^n`, as indices in increasing order.
pub fn supports(cat: &FusionCategory, sigma: &FusionRingElement, n: usize) -> Result<Vec<usize>> {
    if !sigma.category().same(cat) {
        return Err(Error::CategoryMismatch);
    }
    check_nonnegative(sigma)?;
    let mut set = vec![false; cat.rank()];
    set[cat.unit()] = true;
    for _ in 0..n {
        set = step_support(cat, sigma, &set);
    }
    Ok(indices(&set))
}

/// The eventual support of `sigma^n` and the first `n` at which it is
/// reached. Needs the unit inside `sigma`, which makes the supports grow.
pub fn stable_support(cat: &FusionCategory, sigma: &FusionRingElement) -> Result<(Vec<usize>, usize)> {
    if !sigma.category().same(cat) {
        return Err(Error::CategoryMismatch);
    }
    check_nonnegative(sigma)?;
    if !sigma.coeff(cat.unit()).is_positive() {
        return Err(Error::Unsupported(format!("{sigma} does not contain the unit")));
    }
    let mut set = vec![false; cat.rank()];
    set[cat.unit()] = true;
    for n in 0..=cat.rank() {
        let next = step_support(cat, sigma, &set);
        if next == set {
            return Ok((indices(&set), n));
        }
        set = next;
    }
    Err(Error::Internal("supports did not stabilise".into()))
}

/// `pi-bar tensor pi` as a fusion-ring element.
pub fn sigma_of(cat: &std::sync::Arc<FusionCategory>, pi: usize) -> FusionRingElement {
    let p = FusionRingElement::basis(cat, pi);
    p.dual().mul(&p).expect("same category")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{GroupId, Weight};

    #[test]
    fn su2_level_two() {
        let cat = FusionCategory::wzw(GroupId::A1, 2).unwrap();
        let s = sigma_of(&cat, 1);
        assert_eq!(supports(&cat, &s, 1).unwrap(), vec![0, 2]);
        assert_eq!(supports(&cat, &s, 0).unwrap(), vec![0]);
        assert_eq!(stable_support(&cat, &s).unwrap(), (vec![0, 2], 1));
    }

    #[test]
    fn su3_supports_are_b0() {
        for k in 1..=6 {
            let cat = FusionCategory::wzw(GroupId::A2, k).unwrap();
            let pi = cat.index_of(&Weight::new(&[1, 0])).unwrap();
            let s = sigma_of(&cat, pi);
            for n in 0..=8 {
                let got = supports(&cat, &s, n).unwrap();
                let want: Vec<usize> = (0..cat.rank())
                    .filter(|&i| {
                        let [a, b] = cat.weights()[i].coords();
                        (a - b) % 3 == 0 && a + 2 * b <= 3 * n as i64 && 2 * a + b <= 3 * n as i64
                    })
                    .collect();
                assert_eq!(got, want, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn unit_required_for_stabilisation() {
        let cat = FusionCategory::wzw(GroupId::A1, 3).unwrap();
        let p = FusionRingElement::basis(&cat, 1);
        assert!(stable_support(&cat, &p).is_err());
        assert!(supports(&cat, &p.neg(), 1).is_err());
    }
}
