//! Ordered K0 data: Bratteli diagrams of the towers `A(C, pi)` and
//! `B(Rep_k(G), pi)`, the localisation `F[sigma^-1]` with its positive
//! cone, the psi-isomorphism for SU(3), the SU(2) Verlinde-ring identities
//! and the rank experiments.

mod bratteli;
mod experiments;
mod identities;
mod localized;
mod positivity;
mod psi;
mod quotient;
mod riesz;
mod s3;
mod supports;

pub use bratteli::{bratteli, BratteliDiagram, StepRule};
pub use experiments::{nullity_experiments, nullity_pis, nullity_row, ses_rank_checks, Expectation, NullityRow, NullityTable};
pub use identities::{
    det_recursion, invertibility_checks, invertibility_report, invertibility_row, verlinde_identities_check,
    InvertibilityRow,
};
pub use localized::{Localization, LocalizedElement};
pub use positivity::{center_graded_positivity, graded_parts, monomial_grade, Tristate};
pub use psi::{b_set, in_b0, in_b1, m_monomial, psi_map, verify_psi, PsiMapData};
pub use quotient::{tower_generator, verify_quotient_theorem, OrderedRingPoint};
pub use riesz::{cyclic_ring, riesz_counterexample_search};
pub use s3::{rep_s3, s3_example_check};
pub use supports::{sigma_of, stable_support, supports};
