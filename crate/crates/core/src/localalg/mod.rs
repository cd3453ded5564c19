//! Truncated local algebra: Milnor and Tjurina algebras and their filtrations.

pub mod echelon;
pub mod invariants;
pub mod milnor;
pub mod space;

pub use invariants::{
    condition_a, determinacy_bound, filtered_dims_of, filtered_quotient_dims, ideal_membership, quotient_dim_with,
    steenbrink_spectrum, steenbrink_spectrum_of, tjurina_number, ConditionA,
};
pub use milnor::{IdealSpan, JacobianSpan, MilnorAlgebra};
pub use space::TruncatedSpace;
