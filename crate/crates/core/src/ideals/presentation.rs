use serde::{Deserialize, Serialize};

use crate::charpoly::{p_names, p_poly, q_names, q_poly, Substitution};
use crate::error::{Error, Result};
use crate::fusion::character_ratio;
use crate::lie::{GroupId, Weight};
use crate::numeric::Real;
use crate::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IdealKind {
    /// `J_k(G)` in the fundamental classes `x, y`.
    Fusion,
    /// `I_k` in the variables `s, t`.
    ChangeOfVariables,
}

/// Generators of `J_k(G)` or `I_k(G)`, each tagged by its weight, and the
/// point where all of them should vanish.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdealPresentation {
    pub name: String,
    pub kind: IdealKind,
    pub group: GroupId,
    pub level: i64,
    pub weights: Vec<Weight>,
    #[serde(skip)]
    pub generators: Vec<IntPoly>,
    /// Quantum dimensions of the fundamentals for `J_k`; their images under
    /// the change of variables for `I_k`.
    pub point: Vec<f64>,
}

impl IdealPresentation {
    pub fn var_names(&self) -> &'static [&'static str] {
        match self.kind {
            IdealKind::Fusion => q_names(self.group),
            IdealKind::ChangeOfVariables => p_names(self.group),
        }
    }
}

fn w(l: &[i64]) -> Weight {
    Weight::new(l)
}

/// Weights of the generators of `J_k(G)`.
pub fn fusion_ideal_weights(g: GroupId, k: i64) -> Vec<Weight> {
    match g {
        GroupId::A1 => vec![w(&[k + 1])],
        GroupId::A2 => vec![w(&[k + 1, 0]), w(&[k + 2, 0])],
        GroupId::C2 => {
            let mut v: Vec<Weight> = (0..=k + 1).rev().map(|a| w(&[a, k + 1 - a])).collect();
            v.push(w(&[0, k + 2]));
            v
        }
        GroupId::G2 => {
            let mut v: Vec<Weight> = (0..=(k + 1) / 2).map(|b| w(&[k + 1 - 2 * b, b])).collect();
            v.push(w(&[k + 2, 0]));
            v
        }
    }
}

/// Quantum dimensions of the fundamental representations at level `k`.
pub fn fundamental_qdims<T: Real>(g: GroupId, k: i64) -> Result<Vec<T>> {
    g.fundamentals()
        .iter()
        .map(|e| character_ratio::<T>(g, k, e, &g.zero()).map(|z| z.re))
        .collect()
}

fn check_level(k: i64) -> Result<()> {
    if k < 1 {
        return Err(Error::Unsupported(format!("level must be positive, got {k}")));
    }
    Ok(())
}

pub fn fusion_ideal(g: GroupId, k: i64) -> Result<IdealPresentation> {
    check_level(k)?;
    let weights = fusion_ideal_weights(g, k);
    let generators = weights.iter().map(|l| q_poly(g, l)).collect::<Result<_>>()?;
    Ok(IdealPresentation {
        name: format!("J_{k}({})", g.name()),
        kind: IdealKind::Fusion,
        group: g,
        level: k,
        weights,
        generators,
        point: fundamental_qdims::<f64>(g, k)?,
    })
}

/// Generators of `I_k`. For Sp(4) only the weights with even first label
/// have an image in `Z[s,t]`; the odd ones are multiplied by `x` first (see
/// [`ik_generator`]).
pub fn ik_ideal_weights(g: GroupId, k: i64) -> Vec<Weight> {
    fusion_ideal_weights(g, k)
}

/// The `I_k` generator attached to `lambda`: `P_lambda`, or for Sp(4) with
/// odd `lambda_1` the image of `x y^-(l1+l2+1) Q_lambda`.
pub fn ik_generator(g: GroupId, lambda: &Weight) -> Result<IntPoly> {
    if g == GroupId::C2 && lambda[0] % 2 == 1 {
        let q = q_poly(g, lambda)?;
        let n = (lambda[0] + lambda[1] + 1) as i32;
        return crate::charpoly::laurent_to_st(g, &q.shift(&[1, -n]));
    }
    p_poly(g, lambda)
}

/// Images of the fundamental quantum dimensions under the change of
/// variables.
pub fn ik_point<T: Real>(g: GroupId, k: i64) -> Result<Vec<T>> {
    let d = fundamental_qdims::<T>(g, k)?;
    let sub = Substitution::of(g);
    let img = |m: [i32; 2]| {
        let mut v = d[0].powi(m[0]);
        if g.rank() == 2 {
            v = v * d[1].powi(m[1]);
        }
        v
    };
    Ok(sub.new_vars[..g.rank()].iter().map(|m| img(*m)).collect())
}

pub fn ik_ideal(g: GroupId, k: i64) -> Result<IdealPresentation> {
    check_level(k)?;
    let weights = ik_ideal_weights(g, k);
    let generators = weights.iter().map(|l| ik_generator(g, l)).collect::<Result<_>>()?;
    Ok(IdealPresentation {
        name: format!("I_{k}({})", g.name()),
        kind: IdealKind::ChangeOfVariables,
        group: g,
        level: k,
        weights,
        generators,
        point: ik_point::<f64>(g, k)?,
    })
}
