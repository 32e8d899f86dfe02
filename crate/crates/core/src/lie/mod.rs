//! Root data, Weyl groups, weight systems and classical tensor products for
//! the groups of rank one and two.

mod group;
mod roots;
mod tensor;
mod weights;

pub use group::{GroupId, Weight};
pub use roots::{root_system, RootSystemData, WeylElement};
pub use tensor::{affine_fold, classical_tensor, dominant_fold, level, Fold};
pub use weights::{weight_system, weyl_dimension, WeightSystem};
