//! Elements of scf(U)[K] in the κ, χ, P^(q) and power-sum bases.

pub mod antipode;
pub mod character;
pub mod convert;
pub mod element;
pub mod friendly;
pub mod restriction;
pub mod structure;

pub use antipode::{antipode_axiom_check, antipode_via_kappa, takeuchi_antipode};
pub use character::supercharacter_value;
pub use convert::{convert, convert_key, convert_tensor};
pub use element::{Basis, FriendlyOrder, HopfElement, Key, Tensor};
pub use friendly::{check_condition_one, check_condition_two, check_power_sum_lemma, friendly_ge, FriendlinessViolation};
pub use structure::{coproduct, friendly_split_rule, iterated_coproduct, iterated_product, mj_delta_j, pointwise_product, product, restriction};
pub use restriction::{
    check_pointwise_factorization, check_restriction_factorization, check_tensor_factorization, degree_identity, restrict_to,
    single_arc_restriction, tensor_of,
};
