//! Exact computations with two-parameter quantum groups, their Drinfeld and
//! Heisenberg doubles, and modules over them.

mod error;

pub mod algebra;
pub mod cli;
pub mod coeff;
pub mod doubles;
pub mod linalg;
pub mod omodules;
pub mod pairing;
pub mod rootdata;
pub mod text;
pub mod verify;

pub use error::{Error, Result};
