//! Auslander algebras and their stable quotients as based algebras.

mod algebra;
mod build;
mod dot;
mod ideal;

pub use algebra::{BasedAlgebra, BasisElement};
pub use build::{build_gamma, Gamma};
pub use dot::{gabriel_dot, gabriel_quiver};
pub use ideal::{quotient_algebra, two_sided_ideal, IdealBasis, QuotientAlgebra};
