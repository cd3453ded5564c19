//! Hodge ideals, the Hodge-ideal and Tjurina spectra, and related checks.

pub mod generators;
pub mod checks;
pub mod invariants;
pub mod scan;
pub mod vhi;

pub use generators::{
    filtration_monomials, hodge_ideal_generators, hodge_ideal_member, hodge_ideal_mod_jacobian, GeneratorTable,
    HodgeIdealGenSet, Modulo, Setup,
};
pub use vhi::{unit_representative, v_hi_filtration, v_hi_filtration_with, v_hi_subspace, Mode, VhiFiltration};
pub use invariants::{
    epsilon_f, epsilon_of, gamma_quotient, hodge_ideal_spectrum, rank_modulo_order, tjurina_subspectrum, Analysis,
    Epsilon,
};
pub use checks::{
    prop1_check, prop2_witness, splits_off_square, theorem1_check, theorem2_check, theorem3_witness, top_piece_is_f,
    CheckReport,
};
pub use scan::{monotonicity_scan, scan_candidates, Violation};
