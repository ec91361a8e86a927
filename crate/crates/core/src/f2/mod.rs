//! The 2-torsion of a Jacobian as a symplectic F2-space, and
//! theta-characteristics as quadratic forms refining its pairing.

mod count;
mod form;
mod space;
mod vector;

pub use count::{count_forms_by_arf, count_special_theta, count_special_theta_in, ArfCounts, SpecialThetaCount};
pub use form::{decompose_and_restrict, enumerate_forms, Decomposition, QuadraticForm, Subspace, ENUMERATION_CAP_G};
pub use space::SymplecticSpace;
pub use vector::{F2Vector, MAX_DIM};

/// `|Q(V)^+| = 2^{g-1}(2^g + 1)` for a genus-`g` space.
pub fn even_form_count_closed(g: u32) -> u128 {
    (1u128 << (g - 1)) * ((1u128 << g) + 1)
}

/// `|Q(V)^-| = 2^{g-1}(2^g - 1)`.
pub fn odd_form_count_closed(g: u32) -> u128 {
    (1u128 << (g - 1)) * ((1u128 << g) - 1)
}

/// Odd forms vanishing at a fixed `eta != 0`: `2^{g-1}(2^{g-1} - 1)`.
pub fn special_theta_closed(g: u32) -> u128 {
    (1u128 << (g - 1)) * ((1u128 << (g - 1)) - 1)
}

/// Invariant vanishing thetanulls on the cover: `2^{g-2}(2^{g-1} - 1)`, `g >= 2`.
pub fn vanishing_thetanull_closed(g: u32) -> u128 {
    (1u128 << (g - 2)) * ((1u128 << (g - 1)) - 1)
}
