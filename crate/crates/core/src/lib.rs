pub mod error;
pub mod exactla;

pub use error::{Error, Result};
pub mod lambdacat;
pub mod gammaalg;
pub mod par;
pub mod funmod;
pub mod functors;
pub mod random;
pub mod qh;
pub mod verify;
