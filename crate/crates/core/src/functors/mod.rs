//! The morphism and submodule categories of `mod Λ`, the functor `α` into
//! `Γ`-modules, and the recollement through the stable Auslander algebra.

mod alpha;
mod recollement;
mod subcat;
mod t2;
mod theorems;

pub use alpha::{alpha, alpha_data, alpha_map, epi_criterion, AlphaData};
pub use recollement::{is_cotilting, is_tilting, require_selfinjective, summand_classes, Recollement};
pub use subcat::{
    default_bound, dedup, factor_through, ker_alpha_generators, u_generators, v_generators, FactorTerm, SubcatGens,
    Witness,
};
pub use t2::{
    epsilon, epsilon_map, induced_on_cokernels, t2_combine, t2_direct_sum, t2_from_json, t2_hom, t2_iso, t2_to_json, MonoPair, T2Morphism,
    T2Json, T2Object,
};
pub use theorems::{dense_lift_f, dense_lift_g, fullness_check, theorem2_check, DenseLift, Theorem2Report, Which};
