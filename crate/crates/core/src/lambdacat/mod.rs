//! Bound quivers, their representations, and catalogs of indecomposables.

mod catalog;
pub mod json;
pub mod nakayama;
mod quiver;
mod rep;

pub use catalog::{radical_of_end, Catalog, Entry, ProjectiveVertex};
pub use json::{a3_sink_catalog, load_catalog};
pub use nakayama::nakayama_catalog;
pub use quiver::{Arrow, BoundQuiver, Term};
pub use rep::{
    cokernel_rep, commuting_equations, direct_sum, hom_dim, hom_space, image_rep, kernel_rep, local_iso,
    map_from_sum, map_into_sum, DirectSum, HomSpace, Rep, RepMap,
};
