//! Exact integer linear algebra: sparse matrices, multi-prime rank,
//! fraction-free and multi-modular determinants, rational row reduction.

mod det;
mod modular;
mod rank;
mod rational;
mod sparse;

pub use det::{det_bareiss, det_modular, exact_det};
pub use modular::{random_primes, Montgomery};
pub use rank::{exact_rank, rank_mod_p, RankCertificate};
pub use rational::{rational_rank, rational_row_reduce};
pub use sparse::SparseMatrix;
