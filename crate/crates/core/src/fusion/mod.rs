//! Fusion categories: Kac-Walton fusion rules, the Kac-Peterson S-matrix,
//! the Verlinde formula, fusion-ring arithmetic and quantum dimensions.

mod category;
mod checks;
mod element;
mod graph;
mod kac_walton;
mod qdim;
pub mod smatrix;
mod verlinde;

pub use checks::{dual_oracle_check, spectral_check};
pub use category::{enumerate_simples, ExplicitData, FusionCategory, Source};
pub use element::{ring_product, FusionRingElement};
pub use graph::{classical_fusion_graph, fusion_graph_dot, matrix_dot};
pub use kac_walton::fusion_matrix_kw;
pub use qdim::{pf_eigenvalue_sym, quantum_dim, quantum_dims};
pub use smatrix::{character_ratio, smatrix, wzw_quantum_dims, SMatrix};
pub use verlinde::{eigenvector_residual, fusion_matrix_verlinde, verlinde_from_s};
