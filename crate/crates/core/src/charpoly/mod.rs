//! Representation-ring polynomials `Q_lambda`, their re-parametrisations
//! `P_lambda(s,t)` and identity checks about both families.

mod golden;
mod lemma9;
mod lemmas;
mod qpoly;
mod subst;

pub use golden::{golden_table, verify_tables};
pub use lemma9::{lemma9_check, lemma9_decompose, reassemble, Lemma9Term, Variant};
pub use lemmas::{
    lemma6_support_check, lemma_n_check, p_recursion_check, q_positivity_check, weyl_character_identity_check,
    weyl_character_residual,
};
pub use qpoly::q_poly;
pub use subst::{divisor, laurent_to_st, p_names, p_poly, q_names, st_to_laurent, Substitution};
