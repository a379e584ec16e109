//! Modules over a based algebra, stored as contravariant functors on its
//! vertices, and the homological toolkit on them.

mod cover;
mod decompose;
mod hom;
pub mod json;
mod lambda;
mod module;

pub use cover::{
    cosyzygy, ext1, ext1_from, free_injective, id_leq, injective_dimension, injective_envelope, injective_quotient,
    is_divisible, is_injective, is_projective, is_selfinjective_algebra, is_torsionless, map_from_free, pd_leq,
    projective_cover, projective_dimension, projective_embedding, projective_resolution, strip_projectives, syzygy,
    undual, Cover, Ext1, Resolution,
};
pub use decompose::{fitting_decompose, iso_test, Certification, Decomposition, IsoVerdict, Summand, DEFAULT_TRIALS};
pub use hom::{end, hom, hom_dim, hom_exhaustive, ModHom};
pub use lambda::{inj_map, inj_module, proj_map, proj_module};
pub use module::{
    cokernel, direct_sum, dual, dual_map, free_projective, image, kernel, map_from_sum, map_into_sum,
    projective_top, quotient_map, restricted_map, FunMap, FunMod, ModSum,
};
