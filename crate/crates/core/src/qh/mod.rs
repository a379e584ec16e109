//! Partial orders on simple modules, standard and costandard modules, and
//! the comparison of `Δ`-filtered modules with torsionless ones.

mod filtration;
mod order;
mod search;
mod standard;

pub use filtration::{
    costandard_modules, delta_filtration, delta_filtration_with, nabla_filtration, standard_modules, Filtration, Layer,
};
pub use order::{loewy_order, rep_loewy_length, SimpleOrder, MAX_LINEAR_VERTICES};
pub use search::{
    canonical_torsionless, characteristic_tilting_check, is_quasi_hereditary, qh_tol_equivalence, random_delta_filtered,
    random_extension, theorem3_negative_search, tol_conditions, torsionless_samples, CharacteristicReport, OrderOutcome,
    QhFailure, SearchReport, TolReport,
};
pub use standard::{costandard_module, standard_module};
