use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lie::{classical_tensor, GroupId, Weight};
use crate::poly::Poly;
use crate::IntPoly;

type Memo = Mutex<HashMap<(GroupId, Weight), IntPoly>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Polynomial in the fundamental classes `x` (and `y`) representing the
/// irreducible with highest weight `lambda`.
///
/// Peels off one fundamental: with `lambda = base + e_j`,
/// `x_j Q_base = Q_lambda + sum mult Q_nu` where every other `nu` has
/// strictly smaller `(nu + rho, nu + rho)`.
pub fn q_poly(g: GroupId, lambda: &Weight) -> Result<IntPoly> {
    g.check_rank(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant {
            weight: lambda.to_string(),
        });
    }
    compute(g, lambda)
}

fn compute(g: GroupId, lambda: &Weight) -> Result<IntPoly> {
    if let Some(p) = memo().lock().unwrap().get(&(g, *lambda)) {
        return Ok(p.clone());
    }
    let r = g.rank();
    let p = if lambda.size() == 0 {
        Poly::one(r)
    } else {
        let j = if lambda[0] >= 1 { 0 } else { 1 };
        let e = g.fundamental(j);
        let base = *lambda - e;
        let mut acc = &Poly::var(r, j) * &compute(g, &base)?;
        for (nu, m) in classical_tensor(g, &base, &e)? {
            if nu == *lambda {
                if m != 1 {
                    return Err(Error::Internal(format!("{lambda} occurs {m} times in {base} x {e}")));
                }
                continue;
            }
            acc -= &compute(g, &nu)?.scale(&BigInt::from(m));
        }
        acc
    };
    memo().lock().unwrap().insert((g, *lambda), p.clone());
    Ok(p)
}
