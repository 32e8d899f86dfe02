//! Groebner bases over Q, the fusion ideals `J_k(G)`, the ideals `I_k` in
//! the variables `s, t`, and the checks built on them.

mod checks;
mod groebner;
mod presentation;

pub use checks::{
    congruent, fusion_variety_check, ik_quotient_dim, presentation_basis, verify_gepner_fuchs, verify_lemma_generation,
};
pub use groebner::{buchberger, normal_form, GroebnerBasis, StandardMonomials};
pub use presentation::{
    fundamental_qdims, fusion_ideal, fusion_ideal_weights, ik_generator, ik_ideal, ik_ideal_weights, ik_point,
    IdealKind, IdealPresentation,
};
