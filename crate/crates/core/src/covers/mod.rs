//! Coset covers of finite abelian groups and affine hyperplane covers.

mod cover;
mod group;
mod hyperplane;
mod search;

pub use cover::{index, Coset, CosetCover};
pub use group::{AbelianGroup, ElementSet, Subgroup};
pub use hyperplane::{
    all_hyperplanes, c_vanishing_by_cover, for_each_hyperplane_cover, HyperplaneCoverInstance,
};
pub use search::{
    check_phi_bound, coset_candidates, find_efficient_cover, for_each_coset_cover,
    for_each_irredundant_cover, phi_exact, phi_pn_maximal,
};
