//! Closed-form antipodes and the statistics they are built from.

pub mod chi;
pub mod kappa;
pub mod power_sum;

pub use chi::{
    antipode_chi_single_arc, arc_factorization, check_chi_triangularity, chi_antipode_leading, global_stats,
    single_arc_coefficient, trivial_coefficient_sum, z_stats, z_value, ArcFactorization, Segment, ZStats,
};
pub use kappa::{antipode_kappa, expand_products, kappa_antipode_products, kappa_in_atomic_products, minimal_coarsenings, ProductSum};
pub use power_sum::{antipode_p_friendly, antipode_p_q};
