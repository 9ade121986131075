//! Labels, linear orders, arc sets and their statistics.

pub mod arcs;
pub mod enumerate;
pub mod factor;
pub mod label;
pub mod order;
pub mod poset;

pub use arcs::{dim, nst, standardize, Arc, ArcSet};
pub use enumerate::{
    enumerate_arcsets, enumerate_orders, enumerate_set_compositions, enumerate_set_compositions_with_first,
    enumerate_supersets, SetComposition,
};
pub use factor::{atomic_factorization, classify, descents, is_atomic, num_runs, rising_factorization, Classification};
pub use label::{labels, Label, LabelSet};
pub use order::LinearOrder;
pub use poset::{atomic_le, covers, is_minimal_over, mobius_closed, mobius_recursive, upper_set};
