pub mod coeff;
pub mod error;
pub mod ring;

pub use error::{Error, Result};
pub mod cli;
pub mod deform;
pub mod endo;
pub mod ideals;
pub mod linalg;
pub mod random;
