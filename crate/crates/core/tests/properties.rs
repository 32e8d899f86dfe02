use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use verlinde_core::charpoly::{laurent_to_st, p_names, p_poly, q_poly, st_to_laurent};
use verlinde_core::fusion::{
    enumerate_simples, pf_eigenvalue_sym, quantum_dims, wzw_quantum_dims, FusionCategory, FusionRingElement,
};
use verlinde_core::ideals::{buchberger, fusion_ideal, ik_ideal, normal_form, presentation_basis};
use verlinde_core::ktheory::{in_b0, m_monomial, sigma_of, supports, tower_generator, Localization};
use verlinde_core::lie::{classical_tensor, level, root_system, weight_system, weyl_dimension};
use verlinde_core::linalg::exact_rank;
use verlinde_core::poly::MonomialOrder;
use verlinde_core::{Config, Error, GroupId, IntPoly, RatPoly, Weight};

fn any_group() -> impl Strategy<Value = GroupId> {
    prop::sample::select(GroupId::ALL.to_vec())
}

/// A dominant weight of level at most `max` for some group.
fn group_weight(max: i64) -> impl Strategy<Value = (GroupId, Weight)> {
    any_group().prop_flat_map(move |g| {
        let ws: Vec<Weight> = enumerate_simples(g, max);
        prop::sample::select(ws).prop_map(move |w| (g, w))
    })
}

fn small_poly(nvars: usize, deg: i32) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(((0..=deg), (0..=deg), -4i64..=4), 0..6).prop_map(move |t| {
        IntPoly::from_i64(nvars, &t.into_iter().map(|(a, b, c)| ([a, if nvars == 1 { 0 } else { b }], c)).collect::<Vec<_>>())
    })
}

fn category(g: GroupId, k: i64) -> Arc<FusionCategory> {
    FusionCategory::wzw(g, k).unwrap()
}

fn tower_localization(g: GroupId, k: i64) -> Arc<Localization> {
    let cat = category(g, k);
    let pi = cat.index_of(&tower_generator(g)).unwrap();
    Localization::new(sigma_of(&cat, pi)).unwrap()
}

fn element(cat: &Arc<FusionCategory>, coeffs: &[i64]) -> FusionRingElement {
    let n = cat.rank();
    let c: Vec<i64> = (0..n).map(|i| coeffs.get(i).copied().unwrap_or(0)).collect();
    FusionRingElement::from_i64(cat, &c).unwrap()
}

fn group_level(kmax: i64) -> impl Strategy<Value = (GroupId, i64)> {
    (any_group(), 1..=kmax).prop_filter("tower generator fits", |(g, k)| level(*g, &tower_generator(*g)).unwrap() <= *k)
}

#[test]
fn weyl_groups_are_closed() {
    for (g, order) in [(GroupId::A1, 2), (GroupId::A2, 6), (GroupId::C2, 8), (GroupId::G2, 12)] {
        let rs = root_system(g);
        assert_eq!(rs.weyl.len(), order, "{g}");
        // rho is regular, so an element is determined by its image of rho
        let rho = g.rho();
        let images: BTreeSet<Weight> = rs.weyl.iter().map(|w| rs.apply(w, &rho)).collect();
        assert_eq!(images.len(), order);
        for a in &rs.weyl {
            for b in &rs.weyl {
                assert!(images.contains(&rs.apply(a, &rs.apply(b, &rho))));
            }
        }
    }
}

#[test]
fn a2_edge_rule() {
    let step = Weight::new(&[1, 0]);
    for lam in enumerate_simples(GroupId::A2, 10) {
        let got = classical_tensor(GroupId::A2, &lam, &step).unwrap();
        let [a, b] = lam.coords();
        let want: BTreeMap<Weight, u64> = [[a + 1, b], [a, b - 1], [a - 1, b + 1]]
            .into_iter()
            .filter(|c| c[0] >= 0 && c[1] >= 0)
            .map(|c| (Weight::new(&c), 1))
            .collect();
        assert_eq!(got, want, "{lam}");
    }
}

#[test]
fn weight_systems_are_weyl_invariant() {
    for g in GroupId::ALL {
        let rs = root_system(g);
        let mut lams = enumerate_simples(g, 3);
        lams.extend(g.fundamentals());
        for lam in lams {
            let ws = weight_system(g, &lam).unwrap();
            assert_eq!(ws.dim() as u128, weyl_dimension(g, &lam), "{g} {lam}");
            for (mu, &m) in ws.iter() {
                for w in &rs.weyl {
                    assert_eq!(ws.mult(&rs.apply(w, mu)), m);
                }
            }
        }
    }
}

#[test]
fn normal_matrices_have_equal_rank() {
    for g in GroupId::ALL {
        for k in 1..=6 {
            let cat = category(g, k);
            for f in g.fundamentals() {
                let Some(i) = cat.index_of(&f) else { continue };
                let ni = cat.matrix(i);
                let ns = cat.matrix(cat.dual(i)).mul(ni).unwrap();
                assert_eq!(exact_rank(ni, 7).rank, exact_rank(&ns, 7).rank, "{g} k={k} {f}");
            }
        }
    }
}

#[test]
fn quantum_dimensions_are_pf_eigenvalues() {
    for g in GroupId::ALL {
        for k in 1..=12 {
            let cat = category(g, k);
            let d = quantum_dims::<f64>(&cat);
            for f in g.fundamentals() {
                let Some(i) = cat.index_of(&f) else { continue };
                let pf = pf_eigenvalue_sym(cat.matrix(i));
                assert!((pf - d[i]).abs() < 1e-9, "{g} k={k} {f}: {pf} vs {}", d[i]);
            }
        }
    }
}

#[test]
fn a2_standard_monomials_match_triality_zero_rank() {
    for k in 1..=8 {
        let gb = presentation_basis(&ik_ideal(GroupId::A2, k).unwrap(), MonomialOrder::Grevlex).unwrap();
        let cat = category(GroupId::A2, k);
        let pi = cat.index_of(&Weight::new(&[1, 0])).unwrap();
        let ns = cat.matrix(cat.dual(pi)).mul(cat.matrix(pi)).unwrap();
        let block: Vec<usize> =
            (0..cat.rank()).filter(|&i| GroupId::A2.center_grade(&cat.weights()[i]) == 0).collect();
        let r = exact_rank(&ns.select(&block, &block), 3).rank;
        assert_eq!(gb.standard_monomials().count(), Some(r), "k={k}");
    }
}

#[test]
fn a1_standard_monomials_match_even_rank() {
    for k in 1..=12 {
        let gb = presentation_basis(&ik_ideal(GroupId::A1, k).unwrap(), MonomialOrder::Grevlex).unwrap();
        let count = gb.standard_monomials().count().unwrap();
        assert_eq!(count as i64, (k + 1) / 2, "k={k}");
        let cat = category(GroupId::A1, k);
        let ns = cat.matrix(1).mul(cat.matrix(1)).unwrap();
        let even: Vec<usize> = (0..cat.rank()).step_by(2).collect();
        assert_eq!(exact_rank(&ns.select(&even, &even), 3).rank, count, "k={k}");
    }
}

#[test]
fn monomial_bookkeeping_on_b0() {
    for n in 0..=6 {
        for a in 0..=3 * n {
            for b in 0..=3 * n {
                let lam = Weight::new(&[a, b]);
                if !in_b0(&lam, n) {
                    continue;
                }
                let mp = &m_monomial(&lam, n).unwrap() * &p_poly(GroupId::A2, &lam).unwrap();
                let q = q_poly(GroupId::A2, &lam).unwrap().shift(&[-n as i32, -n as i32]);
                assert_eq!(st_to_laurent(GroupId::A2, &mp), q, "{lam} n={n}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tensor_commutes_and_conserves_dimension((g, lam) in group_weight(4), mu_idx in 0usize..64) {
        let ws = enumerate_simples(g, 4);
        let mu = ws[mu_idx % ws.len()];
        let lm = classical_tensor(g, &lam, &mu).unwrap();
        prop_assert_eq!(&lm, &classical_tensor(g, &mu, &lam).unwrap());
        let total: u128 = lm.iter().map(|(nu, m)| *m as u128 * weyl_dimension(g, nu)).sum();
        prop_assert_eq!(total, weyl_dimension(g, &lam) * weyl_dimension(g, &mu));
    }

    #[test]
    fn q_poly_is_a_homomorphism((g, lam) in group_weight(4), mu_idx in 0usize..64) {
        let ws = enumerate_simples(g, 4);
        let mu = ws[mu_idx % ws.len()];
        let lhs = &q_poly(g, &lam).unwrap() * &q_poly(g, &mu).unwrap();
        let mut rhs = IntPoly::zero(g.rank());
        for (nu, m) in classical_tensor(g, &lam, &mu).unwrap() {
            rhs += &q_poly(g, &nu).unwrap().scale(&BigInt::from(m));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn su3_swap_symmetry(a in 0i64..8, b in 0i64..8) {
        let w = Weight::new(&[a, b]);
        let g = GroupId::A2;
        prop_assert_eq!(q_poly(g, &w).unwrap().swap_vars(), q_poly(g, &w.swapped()).unwrap());
        prop_assert_eq!(p_poly(g, &w).unwrap().swap_vars(), p_poly(g, &w.swapped()).unwrap());
    }

    #[test]
    fn change_of_variables_round_trips((g, p) in any_group().prop_flat_map(|g| small_poly(p_names(g).len(), 4).prop_map(move |p| (g, p)))) {
        prop_assert_eq!(laurent_to_st(g, &st_to_laurent(g, &p)).unwrap(), p);
    }

    #[test]
    fn supports_are_stationary((g, k) in group_level(5), extra in 0usize..3) {
        let cat = category(g, k);
        for f in g.fundamentals() {
            let Some(i) = cat.index_of(&f) else { continue };
            let sigma = sigma_of(&cat, i);
            let n = cat.rank() + extra;
            prop_assert_eq!(supports(&cat, &sigma, n).unwrap(), supports(&cat, &sigma, n + 1).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn groebner_bases_ignore_generator_order(g in any_group(), k in 1i64..=3, perm in Just(()).prop_flat_map(|_| Just((0usize..8).collect::<Vec<_>>()).prop_shuffle())) {
        let gens: Vec<RatPoly> = fusion_ideal(g, k).unwrap().generators.iter().map(IntPoly::to_rational).collect();
        let shuffled: Vec<RatPoly> = perm.iter().filter(|&&i| i < gens.len()).map(|&i| gens[i].clone()).collect();
        let a = buchberger(&gens, MonomialOrder::Grevlex).unwrap();
        let b = buchberger(&shuffled, MonomialOrder::Grevlex).unwrap();
        prop_assert_eq!(a.generators(), b.generators());
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(g in any_group(), k in 1i64..=4, p in small_poly(2, 6), q in small_poly(2, 6), c in -5i64..=5) {
        let nv = g.rank();
        let restrict = |x: &IntPoly| IntPoly::from_terms(nv, x.terms().filter(|(e, _)| nv == 2 || e[1] == 0).map(|(e, c)| (*e, c.clone()))).to_rational();
        let (p, q) = (restrict(&p), restrict(&q));
        let o = MonomialOrder::Grevlex;
        let gb = presentation_basis(&fusion_ideal(g, k).unwrap(), o).unwrap();
        let np = normal_form(&p, &gb, o).unwrap();
        prop_assert_eq!(&normal_form(&np, &gb, o).unwrap(), &np);
        let c = BigRational::from_integer(c.into());
        let lhs = normal_form(&(&p + &q.scale(&c)), &gb, o).unwrap();
        let rhs = &np + &normal_form(&q, &gb, o).unwrap().scale(&c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn localized_ring_laws((g, k) in group_level(4), a in prop::collection::vec(-3i64..=3, 12), b in prop::collection::vec(-3i64..=3, 12), c in prop::collection::vec(-3i64..=3, 12), n in (0u32..3, 0u32..3, 0u32..3)) {
        let loc = tower_localization(g, k);
        let cat = loc.category().clone();
        let x = loc.element(element(&cat, &a), n.0).unwrap();
        let y = loc.element(element(&cat, &b), n.1).unwrap();
        let z = loc.element(element(&cat, &c), n.2).unwrap();
        prop_assert!(x.mul(&y).unwrap().equals(&y.mul(&x).unwrap()).unwrap());
        prop_assert!(x.mul(&y).unwrap().mul(&z).unwrap().equals(&x.mul(&y.mul(&z).unwrap()).unwrap()).unwrap());
        prop_assert!(x.mul(&loc.one()).unwrap().equals(&x).unwrap());
        let lhs = x.mul(&y.add(&z).unwrap()).unwrap();
        let rhs = x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
        // same class with a larger denominator
        let sigma = loc.sigma().clone();
        let lifted = loc.element(x.numerator().mul(&sigma).unwrap(), x.exponent() + 1).unwrap();
        prop_assert!(lifted.equals(&x).unwrap());
    }

    #[test]
    fn positive_cone_is_closed((g, k) in group_level(6), pairs in prop::collection::vec((prop::collection::vec(-2i64..=4, 12), prop::collection::vec(-2i64..=4, 12), 0u32..3, 0u32..3), 20)) {
        let cfg = Config::default();
        let loc = tower_localization(g, k);
        let cat = loc.category().clone();
        for (a, b, na, nb) in pairs {
            let x = loc.element(element(&cat, &a), na).unwrap();
            let y = loc.element(element(&cat, &b), nb).unwrap();
            if !matches!(x.is_positive(&cfg), Ok(true)) || !matches!(y.is_positive(&cfg), Ok(true)) {
                continue;
            }
            for z in [x.add(&y).unwrap(), x.mul(&y).unwrap()] {
                match z.is_positive(&cfg) {
                    Ok(v) => prop_assert!(v, "{} not positive", z),
                    Err(Error::IndeterminateSign { .. }) => {}
                    Err(e) => return Err(TestCaseError::fail(e.to_string())),
                }
            }
        }
    }

    #[test]
    fn positivity_matches_quantum_dimension_sign((g, k) in group_level(6), a in prop::collection::vec(-4i64..=4, 16), n in 0u32..4) {
        let cfg = Config::default();
        let loc = tower_localization(g, k);
        let cat = loc.category().clone();
        let v = element(&cat, &a);
        let w = wzw_quantum_dims::<f64>(g, k);
        let pairing: f64 = (0..cat.rank()).map(|i| w[i] * a.get(i).copied().unwrap_or(0) as f64).sum();
        let norm: f64 = a.iter().take(cat.rank()).map(|c| c.abs() as f64).sum();
        let x = loc.element(v, n).unwrap();
        if x.is_zero() {
            return Ok(());
        }
        if pairing.abs() > 1e-6 * (1.0 + norm) {
            prop_assert_eq!(x.is_positive(&cfg).unwrap(), pairing > 0.0);
        }
    }
}
